#include "qskew/phase_space.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <Eigen/Eigenvalues>

#include <cmath>

namespace qskew {

Matrix lowering_operator(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Matrix embed_axis(const Matrix& single, int axis, int d, int n) {
  Matrix out = Matrix::Identity(1, 1);
  for (int ax = 0; ax < d; ++ax) {
    const Matrix factor = (ax == axis) ? single : Matrix::Identity(n, n);
    out = Eigen::kroneckerProduct(out, factor).eval();
  }
  return out;
}

PhaseSpaceRep build_harmonic_rep(int d, int n, double hbar, Index max_dim) {
  if (d < 1) throw Error("build_harmonic_rep: d must be >= 1");
  if (n < 2) throw Error("build_harmonic_rep: N must be >= 2");
  if (!(hbar > 0.0)) throw Error("build_harmonic_rep: hbar must be positive");
  Index dim = 1;
  for (int i = 0; i < d; ++i) {
    dim *= n;
    if (dim > max_dim) {
      throw Error("build_harmonic_rep: N^d exceeds the memory cap of " + std::to_string(max_dim));
    }
  }

  const Matrix a = lowering_operator(n);
  const double c = std::sqrt(hbar / 2.0);
  const Matrix x1 = c * (a + a.adjoint());
  const Matrix p1 = kI * c * (a.adjoint() - a);

  PhaseSpaceRep rep;
  rep.d_ = d;
  rep.n_ = n;
  rep.hbar_ = hbar;
  rep.dim_ = dim;
  const SpectralDecomposition x1_spec = spectral_decompose(HermitianOperator(x1));
  for (int ax = 0; ax < d; ++ax) {
    rep.x_ops_.emplace_back(embed_axis(x1, ax, d, n));
    rep.p_ops_.emplace_back(embed_axis(p1, ax, d, n));
    SpectralDecomposition sd;
    sd.eigenvalues = RealVector(dim);
    // x_ax = I ⊗ .. ⊗ x1 ⊗ .. ⊗ I shares eigenvectors with the embedding of x1's eigenbasis.
    Matrix u = embed_axis(x1_spec.eigenvectors, ax, d, n);
    const Index inner = [&] {
      Index s = 1;
      for (int k = ax + 1; k < d; ++k) s *= n;
      return s;
    }();
    for (Index i = 0; i < dim; ++i) sd.eigenvalues(i) = x1_spec.eigenvalues((i / inner) % n);
    sd.eigenvectors = std::move(u);
    rep.x_spectra_.push_back(std::move(sd));
  }
  return rep;
}

std::vector<int> PhaseSpaceRep::levels(Index flat) const {
  std::vector<int> out(static_cast<std::size_t>(d_));
  for (int ax = d_ - 1; ax >= 0; --ax) {
    out[static_cast<std::size_t>(ax)] = static_cast<int>(flat % n_);
    flat /= n_;
  }
  return out;
}

Matrix QuantumGradient::squared_magnitude() const {
  Matrix s = Matrix::Zero(dx.front().rows(), dx.front().cols());
  for (const auto& c : dx) s.noalias() += c.adjoint() * c;
  for (const auto& c : dv) s.noalias() += c.adjoint() * c;
  return s;
}

double QuantumGradient::norm(SchattenExponent p) const {
  std::vector<Matrix> all = dx;
  all.insert(all.end(), dv.begin(), dv.end());
  return vector_operator_norm(all, p);
}

QuantumGradient quantum_gradient(const Matrix& a, const PhaseSpaceRep& rep) {
  if (a.rows() != rep.dim() || a.cols() != rep.dim()) {
    throw DimensionError("quantum_gradient: operator dimension " + std::to_string(a.rows()) +
                         " does not match representation dimension " + std::to_string(rep.dim()));
  }
  QuantumGradient g;
  const double hb = rep.hbar();
  for (int ax = 0; ax < rep.d(); ++ax) {
    g.dx.push_back(commutator(rep.x(ax).matrix(), a) / (kI * hb));
    g.dv.push_back((kI / hb) * commutator(rep.p(ax).matrix(), a));
  }
  return g;
}

std::vector<Matrix> iterated_gradient_components(const Matrix& a, const PhaseSpaceRep& rep,
                                                 int order) {
  if (order < 1 || order > kMaxGradientOrder) {
    throw Error("iterated gradient order must be in [1, " + std::to_string(kMaxGradientOrder) +
                "], got " + std::to_string(order));
  }
  std::vector<Matrix> level{a};
  for (int k = 0; k < order; ++k) {
    std::vector<Matrix> next;
    next.reserve(level.size() * static_cast<std::size_t>(2 * rep.d()));
    for (const auto& c : level) {
      QuantumGradient g = quantum_gradient(c, rep);
      for (int ax = 0; ax < rep.d(); ++ax) {
        next.push_back(std::move(g.dx[static_cast<std::size_t>(ax)]));
        next.push_back(std::move(g.dv[static_cast<std::size_t>(ax)]));
      }
    }
    level = std::move(next);
  }
  return level;
}

double vector_operator_norm(const std::vector<Matrix>& components, SchattenExponent p) {
  if (components.empty()) throw Error("vector_operator_norm: no components");
  if (p.value() == 2.0) {
    double acc = 0.0;
    for (const auto& c : components) acc += c.squaredNorm();
    return std::sqrt(acc);
  }
  Matrix s = Matrix::Zero(components.front().cols(), components.front().cols());
  for (const auto& c : components) s.noalias() += c.adjoint() * c;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (s + s.adjoint()), Eigen::EigenvaluesOnly);
  const RealVector sv = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return schatten_norm_psd(sv, p);
}

double iterated_gradient_norm(const Matrix& a, const PhaseSpaceRep& rep, int order,
                              SchattenExponent p) {
  return vector_operator_norm(iterated_gradient_components(a, rep, order), p);
}

double edge_mass(const Matrix& a, const PhaseSpaceRep& rep) {
  if (a.rows() != rep.dim() || a.cols() != rep.dim()) throw DimensionError("edge_mass: dimension mismatch");
  const double total = a.squaredNorm();
  if (total == 0.0) return 0.0;
  std::vector<bool> top(static_cast<std::size_t>(rep.dim()));
  for (Index i = 0; i < rep.dim(); ++i) {
    for (int lvl : rep.levels(i)) {
      if (lvl == rep.n_per_axis() - 1) top[static_cast<std::size_t>(i)] = true;
    }
  }
  double edge = 0.0;
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) {
      if (top[static_cast<std::size_t>(r)] || top[static_cast<std::size_t>(c)]) edge += std::norm(a(r, c));
    }
  }
  return edge / total;
}

void require_small_edge_mass(const Matrix& a, const PhaseSpaceRep& rep, double threshold) {
  const double m = edge_mass(a, rep);
  if (m > threshold) throw TruncationError(m, threshold);
}

Matrix function_of_position(const PhaseSpaceRep& rep, int axis, const std::function<cplx(double)>& u) {
  return apply_function(rep.x_spectrum(axis), u);
}

}  // namespace qskew
