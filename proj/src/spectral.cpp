#include "qskew/spectral.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <vector>

namespace qskew {

namespace {

// Applies `op` to every 1-D line of f along `axis`, in Fourier space.
template <typename Op>
Matrix transform_lines(const Matrix& f, int axis, Op op) {
  Eigen::FFT<double> fft;
  Matrix out(f.rows(), f.cols());
  const Index n = axis == 0 ? f.rows() : f.cols();
  const Index lines = axis == 0 ? f.cols() : f.rows();
  std::vector<cplx> in(static_cast<std::size_t>(n)), spec;
  std::vector<cplx> back;
  for (Index l = 0; l < lines; ++l) {
    for (Index k = 0; k < n; ++k) in[static_cast<std::size_t>(k)] = axis == 0 ? f(k, l) : f(l, k);
    fft.fwd(spec, in);
    for (Index k = 0; k < n; ++k) spec[static_cast<std::size_t>(k)] *= op(k, n);
    fft.inv(back, spec);
    for (Index k = 0; k < n; ++k) {
      if (axis == 0) {
        out(k, l) = back[static_cast<std::size_t>(k)];
      } else {
        out(l, k) = back[static_cast<std::size_t>(k)];
      }
    }
  }
  return out;
}

}  // namespace

double angular_wavenumber(Index k, Index n, double spacing) {
  const Index shifted = (2 * k <= n) ? k : k - n;
  return 2.0 * kPi * static_cast<double>(shifted) / (static_cast<double>(n) * spacing);
}

Matrix spectral_derivative(const Matrix& f, double spacing, int axis, int order) {
  if (axis != 0 && axis != 1) throw Error("spectral_derivative: axis must be 0 or 1");
  if (order < 0) throw Error("spectral_derivative: order must be non-negative");
  return transform_lines(f, axis, [&](Index k, Index n) -> cplx {
    if (order % 2 == 1 && n % 2 == 0 && 2 * k == n) return 0.0;
    return std::pow(kI * angular_wavenumber(k, n, spacing), order);
  });
}

RealMatrix spectral_derivative(const RealMatrix& f, double spacing, int axis, int order) {
  return spectral_derivative(Matrix(f.cast<cplx>()), spacing, axis, order).real();
}

Matrix fft2(const Matrix& f) {
  Eigen::FFT<double> fft;
  Matrix out = f;
  std::vector<cplx> in, spec;
  for (Index c = 0; c < out.cols(); ++c) {
    in.assign(out.col(c).data(), out.col(c).data() + out.rows());
    fft.fwd(spec, in);
    for (Index r = 0; r < out.rows(); ++r) out(r, c) = spec[static_cast<std::size_t>(r)];
  }
  for (Index r = 0; r < out.rows(); ++r) {
    in.resize(static_cast<std::size_t>(out.cols()));
    for (Index c = 0; c < out.cols(); ++c) in[static_cast<std::size_t>(c)] = out(r, c);
    fft.fwd(spec, in);
    for (Index c = 0; c < out.cols(); ++c) out(r, c) = spec[static_cast<std::size_t>(c)];
  }
  return out;
}

}  // namespace qskew
