#include "qskew/states.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

namespace qskew {

namespace {

Matrix product_over_axes(const Matrix& single, int d) {
  Matrix out = Matrix::Identity(1, 1);
  for (int ax = 0; ax < d; ++ax) out = Eigen::kroneckerProduct(out, single).eval();
  return out;
}

DensityOperator from_single_axis(const PhaseSpaceRep& rep, const Matrix& single) {
  return DensityOperator::normalized(product_over_axes(single, rep.d()));
}

}  // namespace

DensityOperator product_pure_state(const PhaseSpaceRep& rep, const Vector& single_axis) {
  if (single_axis.size() != rep.n_per_axis()) throw DimensionError("product_pure_state: vector size");
  const Vector v = single_axis / single_axis.norm();
  return from_single_axis(rep, v * v.adjoint());
}

DensityOperator number_state(const PhaseSpaceRep& rep, int n) {
  if (n < 0 || n >= rep.n_per_axis()) throw Error("number_state: level out of range");
  Vector v = Vector::Zero(rep.n_per_axis());
  v(n) = 1.0;
  return product_pure_state(rep, v);
}

DensityOperator ground_state(const PhaseSpaceRep& rep) { return number_state(rep, 0); }

DensityOperator thermal_state(const PhaseSpaceRep& rep, double beta) {
  if (!(beta > 0.0)) throw Error("thermal_state: beta must be positive");
  Matrix single = Matrix::Zero(rep.n_per_axis(), rep.n_per_axis());
  for (int k = 0; k < rep.n_per_axis(); ++k) single(k, k) = std::exp(-beta * k);
  return from_single_axis(rep, single);
}

Vector squeezed_vacuum_vector(int n, double s) {
  if (!(s > 0.0)) throw Error("squeezed_vacuum: width parameter must be positive");
  // s = exp(-2r); amplitudes on even levels follow c_{2m+2} = -tanh(r) sqrt((2m+1)/(2m+2)) c_{2m}.
  const double r = -0.5 * std::log(s);
  const double t = std::tanh(r);
  Vector v = Vector::Zero(n);
  double c = 1.0 / std::sqrt(std::cosh(r));
  for (int m = 0; 2 * m < n; ++m) {
    v(2 * m) = c;
    c *= -t * std::sqrt((2.0 * m + 1.0) / (2.0 * m + 2.0));
  }
  return v / v.norm();
}

DensityOperator squeezed_vacuum(const PhaseSpaceRep& rep, double s) {
  return product_pure_state(rep, squeezed_vacuum_vector(rep.n_per_axis(), s));
}

DensityOperator coherent_state(const PhaseSpaceRep& rep, cplx alpha) {
  Vector v(rep.n_per_axis());
  cplx c = std::exp(-0.5 * std::norm(alpha));
  for (int k = 0; k < rep.n_per_axis(); ++k) {
    v(k) = c;
    c *= alpha / std::sqrt(static_cast<double>(k + 1));
  }
  return product_pure_state(rep, v);
}

DensityOperator embedded_random_density(const PhaseSpaceRep& rep, int support, Index rank,
                                        std::uint64_t seed) {
  if (support < 1 || support >= rep.n_per_axis()) {
    throw Error("embedded_random_density: support must be in [1, N)");
  }
  Index sub_dim = 1;
  for (int ax = 0; ax < rep.d(); ++ax) sub_dim *= support;
  const DensityOperator small = sample_random_density(sub_dim, rank, seed);

  // Map sub-basis multi-indices (base `support`) onto the full basis (base N).
  std::vector<Index> map(static_cast<std::size_t>(sub_dim));
  for (Index i = 0; i < sub_dim; ++i) {
    Index rem = i, flat = 0, stride = 1;
    for (int ax = rep.d() - 1; ax >= 0; --ax) {
      flat += (rem % support) * stride;
      rem /= support;
      stride *= rep.n_per_axis();
    }
    map[static_cast<std::size_t>(i)] = flat;
  }
  Matrix full = Matrix::Zero(rep.dim(), rep.dim());
  for (Index i = 0; i < sub_dim; ++i) {
    for (Index j = 0; j < sub_dim; ++j) {
      full(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) = small.matrix()(i, j);
    }
  }
  return DensityOperator(HermitianOperator(full));
}

}  // namespace qskew
