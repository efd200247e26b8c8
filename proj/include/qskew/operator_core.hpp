// operator_core.hpp: Hermitian operators, density operators, spectral calculus and Schatten norms

#pragma once

#include "qskew/types.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>

namespace qskew {

inline constexpr double kHermitianTol = 1e-12;  // relative to the largest entry magnitude
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-12;

// Largest |M - M*| entry.
double max_asymmetry(const Matrix& m);

// A Hermitian matrix. Construction validates Hermiticity and then stores the
// exactly symmetrized matrix (M + M*)/2, so every downstream use sees a
// bit-exact Hermitian operator.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const Matrix& m, double tol = kHermitianTol);

  const Matrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

 private:
  Matrix m_;
};

// Eigenvalues sorted descending, eigenvectors as unitary columns. Each column
// is phase-fixed so that its first non-negligible component is real positive.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const;
  Index dim() const noexcept { return eigenvalues.size(); }
};

SpectralDecomposition spectral_decompose(const HermitianOperator& h);

// f(H) = V f(Λ) V*.
Matrix apply_function(const SpectralDecomposition& sd, const std::function<cplx(double)>& f);

// Positive-semidefinite unit-trace operator. Holds its spectral decomposition,
// computed once at construction (needed anyway for the PSD check).
class DensityOperator {
 public:
  DensityOperator() = default;
  explicit DensityOperator(const HermitianOperator& h);
  // Rescales a PSD matrix to unit trace before validation.
  static DensityOperator normalized(const Matrix& m);

  const Matrix& matrix() const noexcept { return base_.matrix(); }
  const HermitianOperator& hermitian() const noexcept { return base_; }
  const SpectralDecomposition& spectrum() const { return *spectrum_; }
  double trace() const noexcept { return trace_; }
  Index dim() const noexcept { return base_.dim(); }

 private:
  HermitianOperator base_;
  double trace_ = 0.0;
  std::shared_ptr<const SpectralDecomposition> spectrum_;
};

// Schatten exponent p in [1, inf].
class SchattenExponent {
 public:
  SchattenExponent(double p);  // NOLINT(google-explicit-constructor): numeric literals read naturally
  static SchattenExponent infinity() { return SchattenExponent(std::numeric_limits<double>::infinity()); }

  double value() const noexcept { return p_; }
  bool is_infinite() const noexcept { return p_ == std::numeric_limits<double>::infinity(); }
  // p' = p/(p-1); infinite for p = 1, one for p = inf.
  SchattenExponent conjugate() const;

 private:
  double p_;
};

// Eigenvalues of magnitude below dim * eps * lambda_max are eigensolver noise;
// they are set to zero before square roots, where sqrt(1e-17) ~ 3e-9 would
// otherwise leak into skew-type functionals.
inline constexpr double kEigenNoiseFactor = 4.0;
RealVector denoised_eigenvalues(const DensityOperator& rho);

// Square root of a density operator built from the denoised spectrum.
HermitianOperator matrix_sqrt_psd(const DensityOperator& rho);

RealVector singular_values(const Matrix& m);
double schatten_norm(const Matrix& m, SchattenExponent p);
// Schatten norm of a Hermitian PSD matrix from its eigenvalues.
double schatten_norm_psd(const RealVector& eigenvalues, SchattenExponent p);

// h^{d/p} ||M||_p with h = 2*pi*hbar.
double scaled_schatten_norm(const Matrix& m, SchattenExponent p, double hbar, int d);
double planck_h(double hbar);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

// Density GG*/Tr(GG*) with G a dim x rank matrix of standard complex Gaussians
// drawn from the pinned generator (see random.hpp).
DensityOperator sample_random_density(Index dim, Index rank, std::uint64_t seed);

}  // namespace qskew
