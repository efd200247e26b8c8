// types.hpp: shared matrix aliases and error types

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace qskew {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  NotHermitianError(double max_asymmetry, double tolerance);
  double max_asymmetry() const noexcept { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

class NotPsdError : public Error {
 public:
  explicit NotPsdError(double min_eigenvalue);
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// Raised when an operator carries weight on the highest retained basis level.
class TruncationError : public Error {
 public:
  TruncationError(double edge_mass, double threshold);
  double edge_mass() const noexcept { return edge_mass_; }

 private:
  double edge_mass_;
};

inline void require_same_dim(const Matrix& a, const Matrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(where) + ": dimension mismatch (" + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ")");
  }
}

}  // namespace qskew
