#include "qskew/random.hpp"

#include <Eigen/QR>

#include <cmath>

namespace qskew {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

double PinnedRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double PinnedRng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  spare_ = r * std::sin(2.0 * kPi * u2);
  return r * std::cos(2.0 * kPi * u2);
}

cplx PinnedRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cplx(re, im) / std::sqrt(2.0);
}

Matrix PinnedRng::ginibre(Index rows, Index cols) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) g(i, j) = complex_normal();
  }
  return g;
}

Matrix PinnedRng::hermitian(Index dim) {
  const Matrix g = ginibre(dim, dim);
  return 0.5 * (g + g.adjoint());
}

Matrix PinnedRng::unitary(Index dim) {
  const Matrix g = ginibre(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < dim; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

Vector PinnedRng::unit_vector(Index dim) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = complex_normal();
  return v / v.norm();
}

}  // namespace qskew
