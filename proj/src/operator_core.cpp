#include "qskew/operator_core.hpp"

#include "qskew/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace qskew {

namespace {

std::string format_double(const char* prefix, double v) {
  std::ostringstream os;
  os << prefix << v;
  return os.str();
}

void phase_fix_columns(Matrix& v) {
  for (Index c = 0; c < v.cols(); ++c) {
    for (Index r = 0; r < v.rows(); ++r) {
      const double mag = std::abs(v(r, c));
      if (mag > 1e-12) {
        v.col(c) *= std::conj(v(r, c)) / mag;
        v(r, c) = cplx(mag, 0.0);
        break;
      }
    }
  }
}

bool lexicographically_less(const Vector& a, const Vector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

NotHermitianError::NotHermitianError(double max_asymmetry, double tolerance)
    : Error(format_double("operator is not Hermitian: max |M - M*| = ", max_asymmetry) +
            format_double(" exceeds tolerance ", tolerance)),
      max_asymmetry_(max_asymmetry) {}

NotPsdError::NotPsdError(double min_eigenvalue)
    : Error(format_double("state is not positive semidefinite: min eigenvalue ", min_eigenvalue)),
      min_eigenvalue_(min_eigenvalue) {}

TruncationError::TruncationError(double edge_mass, double threshold)
    : Error(format_double("truncation warning: edge mass ", edge_mass) +
            format_double(" exceeds ", threshold) + "; increase the basis size"),
      edge_mass_(edge_mass) {}

double max_asymmetry(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("max_asymmetry: matrix must be square");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("HermitianOperator: matrix must be square and non-empty");
  }
  if (!m.allFinite()) throw Error("HermitianOperator: non-finite entries");
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = max_asymmetry(m);
  if (asym > tol * scale) throw NotHermitianError(asym, tol * scale);
  m_ = 0.5 * (m + m.adjoint());
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition spectral_decompose(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw Error("spectral_decompose: eigensolver failed");

  Matrix vecs = solver.eigenvectors();
  phase_fix_columns(vecs);
  const RealVector& vals = solver.eigenvalues();

  const Index n = vals.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  const double tie_tol = 1e-14 * std::max(1.0, vals.cwiseAbs().maxCoeff());
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (std::abs(vals(a) - vals(b)) > tie_tol) return vals(a) > vals(b);
    return lexicographically_less(vecs.col(a), vecs.col(b));
  });

  SpectralDecomposition sd;
  sd.eigenvalues.resize(n);
  sd.eigenvectors.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    sd.eigenvalues(i) = vals(order[static_cast<std::size_t>(i)]);
    sd.eigenvectors.col(i) = vecs.col(order[static_cast<std::size_t>(i)]);
  }
  return sd;
}

Matrix apply_function(const SpectralDecomposition& sd, const std::function<cplx(double)>& f) {
  Vector fvals(sd.dim());
  for (Index i = 0; i < sd.dim(); ++i) fvals(i) = f(sd.eigenvalues(i));
  return sd.eigenvectors * fvals.asDiagonal() * sd.eigenvectors.adjoint();
}

DensityOperator::DensityOperator(const HermitianOperator& h) : base_(h) {
  trace_ = h.matrix().trace().real();
  if (std::abs(trace_ - 1.0) > kTraceTol) {
    throw Error(format_double("DensityOperator: trace must be 1, got ", trace_));
  }
  auto sd = std::make_shared<SpectralDecomposition>(spectral_decompose(h));
  const double min_ev = sd->eigenvalues(sd->dim() - 1);
  if (min_ev < -kPsdTol) throw NotPsdError(min_ev);
  spectrum_ = std::move(sd);
}

DensityOperator DensityOperator::normalized(const Matrix& m) {
  const double tr = m.trace().real();
  if (!(tr > 0.0)) throw Error("DensityOperator::normalized: trace must be positive");
  return DensityOperator(HermitianOperator(m / tr));
}

SchattenExponent::SchattenExponent(double p) : p_(p) {
  if (std::isnan(p) || p < 1.0) throw Error(format_double("Schatten exponent must be >= 1, got ", p));
}

SchattenExponent SchattenExponent::conjugate() const {
  if (is_infinite()) return SchattenExponent(1.0);
  if (p_ == 1.0) return infinity();
  return SchattenExponent(p_ / (p_ - 1.0));
}

RealVector denoised_eigenvalues(const DensityOperator& rho) {
  const RealVector& ev = rho.spectrum().eigenvalues;
  const double floor = kEigenNoiseFactor * static_cast<double>(ev.size()) * std::numeric_limits<double>::epsilon() *
                       ev.cwiseAbs().maxCoeff();
  return ev.unaryExpr([floor](double l) { return l > floor ? l : 0.0; });
}

HermitianOperator matrix_sqrt_psd(const DensityOperator& rho) {
  const auto& sd = rho.spectrum();
  const double min_ev = sd.eigenvalues(sd.dim() - 1);
  if (min_ev < -kPsdTol) throw NotPsdError(min_ev);
  const RealVector roots = denoised_eigenvalues(rho).cwiseSqrt();
  return HermitianOperator(sd.eigenvectors * roots.cast<cplx>().asDiagonal() * sd.eigenvectors.adjoint());
}

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

namespace {

double lp_norm_nonneg(const RealVector& s, SchattenExponent p) {
  if (s.size() == 0) return 0.0;
  const double smax = s.cwiseAbs().maxCoeff();
  if (p.is_infinite() || smax == 0.0) return smax;
  const double pv = p.value();
  double acc = 0.0;
  for (Index i = 0; i < s.size(); ++i) acc += std::pow(std::abs(s(i)) / smax, pv);
  return smax * std::pow(acc, 1.0 / pv);
}

}  // namespace

double schatten_norm(const Matrix& m, SchattenExponent p) {
  if (!m.allFinite()) throw Error("schatten_norm: non-finite entries");
  if (p.value() == 2.0) return m.norm();
  return lp_norm_nonneg(singular_values(m), p);
}

double schatten_norm_psd(const RealVector& eigenvalues, SchattenExponent p) {
  return lp_norm_nonneg(eigenvalues.cwiseMax(0.0), p);
}

double planck_h(double hbar) { return 2.0 * kPi * hbar; }

double scaled_schatten_norm(const Matrix& m, SchattenExponent p, double hbar, int d) {
  if (!(hbar > 0.0)) throw Error("scaled_schatten_norm: hbar must be positive");
  const double norm = schatten_norm(m, p);
  if (p.is_infinite()) return norm;
  return std::pow(planck_h(hbar), static_cast<double>(d) / p.value()) * norm;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

DensityOperator sample_random_density(Index dim, Index rank, std::uint64_t seed) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw Error("sample_random_density: need 1 <= rank <= dim, got dim=" + std::to_string(dim) +
                " rank=" + std::to_string(rank));
  }
  PinnedRng rng(seed);
  const Matrix g = rng.ginibre(dim, rank);
  return DensityOperator::normalized(g * g.adjoint());
}

}  // namespace qskew
