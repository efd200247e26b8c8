#include "qskew/inequalities.hpp"

#include "qskew/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qskew {

namespace {

double half_commutator_expectation(const DensityOperator& rho, const HermitianOperator& a,
                                   const HermitianOperator& b) {
  return 0.5 * std::abs((commutator(a.matrix(), b.matrix()) * rho.matrix()).trace());
}

std::string digest_of(const DensityOperator& rho, const HermitianOperator& a, const HermitianOperator& b) {
  return digest_matrices({&rho.matrix(), &a.matrix(), &b.matrix()});
}

double sqrt_nonneg(double v) { return std::sqrt(std::max(v, 0.0)); }

struct SkewPair {
  double i_x = 0.0;
  double i_p = 0.0;
  double edge = 0.0;
};

SkewPair position_momentum_skew(const DensityOperator& rho, const PhaseSpaceRep& rep) {
  if (rho.dim() != rep.dim()) throw DimensionError("state dimension does not match the representation");
  const Matrix root = matrix_sqrt_psd(rho).matrix();
  SkewPair s;
  s.edge = std::max(edge_mass(rho.matrix(), rep), edge_mass(root, rep));
  if (s.edge > kEdgeMassThreshold) throw TruncationError(s.edge, kEdgeMassThreshold);
  for (int ax = 0; ax < rep.d(); ++ax) {
    s.i_x += 0.5 * commutator(rep.x(ax).matrix(), root).squaredNorm();
    s.i_p += 0.5 * commutator(rep.p(ax).matrix(), root).squaredNorm();
  }
  return s;
}

}  // namespace

RatioReport check_heisenberg(const DensityOperator& rho, const HermitianOperator& a, const HermitianOperator& b,
                             double slack_tol) {
  const double lhs = sqrt_nonneg(variance(rho, a) * variance(rho, b));
  const double rhs = half_commutator_expectation(rho, a, b);
  return make_ratio_report("heisenberg", lhs, rhs, Relation::ge, slack_tol, digest_of(rho, a, b));
}

HierarchyReport check_hierarchy(const DensityOperator& rho, const HermitianOperator& k, double slack_tol) {
  const InfoReport info = info_report(rho, k);
  const std::string digest = digest_matrices({&rho.matrix(), &k.matrix()});
  HierarchyReport h;
  h.variance_vs_sld =
      make_ratio_report("variance_vs_sld", info.variance, 0.25 * info.sld_fisher_direct, Relation::ge, slack_tol, digest);
  h.sld_vs_skew = make_ratio_report("sld_vs_skew", 0.25 * info.sld_fisher_direct, info.skew_commutator, Relation::ge,
                                    slack_tol, digest);
  return h;
}

CramerRaoReport check_cramer_rao(const DensityOperator& rho, const HermitianOperator& a, const HermitianOperator& b,
                                 double slack_tol) {
  const double sigma_a = sqrt_nonneg(variance(rho, a));
  const double var_b = variance(rho, b);
  const double j_b = sld_fisher(rho, b);
  CramerRaoReport r;
  r.bound = make_ratio_report("cramer_rao", sigma_a * sqrt_nonneg(0.25 * j_b), half_commutator_expectation(rho, a, b),
                              Relation::ge, slack_tol, digest_of(rho, a, b));
  r.heisenberg_lhs = sigma_a * sqrt_nonneg(var_b);
  r.improves_heisenberg = r.bound.lhs <= r.heisenberg_lhs * (1.0 + slack_tol) + kZeroFloor;
  return r;
}

RatioReport check_theorem_d(const DensityOperator& rho, const PhaseSpaceRep& rep, ConstantChoice constant,
                            double slack_tol) {
  const int d = rep.d();
  if (d < 2) throw Error("check_theorem_d: requires d >= 2 (use check_theorem_1d for d = 1)");
  const SkewPair s = position_momentum_skew(rho, rep);
  const ConstantInterval c = c_d_interval(d);
  const double c_d = constant == ConstantChoice::upper ? c.upper : c.lower;
  const double q = static_cast<double>(d) / (d - 1);
  const double rhs = rep.hbar() / (8.0 * kPi * c_d) * schatten_norm_psd(rho.spectrum().eigenvalues, q);
  return make_ratio_report(constant == ConstantChoice::upper ? "theorem_d" : "theorem_d_lower_constant",
                           std::sqrt(s.i_x * s.i_p), rhs, Relation::ge, slack_tol,
                           digest_matrices({&rho.matrix()}), s.edge);
}

RatioReport check_theorem_1d(const DensityOperator& rho, const PhaseSpaceRep& rep, double p, double slack_tol) {
  if (rep.d() != 1) throw Error("check_theorem_1d: requires d = 1");
  if (!(p > 1.0) || std::isinf(p)) throw Error("check_theorem_1d: p must lie in (1, inf)");
  const SkewPair s = position_momentum_skew(rho, rep);
  const double pc = p / (p - 1.0);
  const double cs = one_d_constant(1.0 - 1.0 / p).value;
  const double norm = schatten_norm_psd(rho.spectrum().eigenvalues, p);
  const double rhs = rep.hbar() / (8.0 * kPi * std::pow(cs, 2.0 * pc)) * std::pow(norm, pc);
  return make_ratio_report("theorem_1d", std::sqrt(s.i_x * s.i_p), rhs, Relation::ge, slack_tol,
                           digest_values({p, rep.hbar()}) + digest_matrices({&rho.matrix()}), s.edge);
}

double theorem_1d_scaled_ratio(const DensityOperator& rho, const PhaseSpaceRep& rep, double p) {
  if (rep.d() != 1) throw Error("theorem_1d_scaled_ratio: requires d = 1");
  const double hb = rep.hbar();
  const double s = 1.0 - 1.0 / p;
  const double cs = one_d_constant(s).value;
  const Matrix root = matrix_sqrt_psd(rho).matrix();
  const double grad_x = scaled_schatten_norm(commutator(rep.x(0).matrix(), root) / (kI * hb), 2.0, hb, 1);
  const double grad_v = scaled_schatten_norm((kI / hb) * commutator(rep.p(0).matrix(), root), 2.0, hb, 1);
  const double l1 = scaled_schatten_norm(rho.matrix(), 1.0, hb, 1);
  const double lhs = scaled_schatten_norm(rho.matrix(), p, hb, 1) / (cs * cs);
  const double rhs = std::pow(2.0, s) * std::pow(grad_x * grad_v, s) * std::pow(l1, 1.0 / p);
  return std::pow(rhs / lhs, p / (p - 1.0));
}

double position_commutator_norm(const Matrix& rho, const PhaseSpaceRep& rep, double p) {
  if (rep.d() != 1) throw Error("position_commutator_norm: requires d = 1");
  return scaled_schatten_norm(commutator(rep.x(0).matrix(), rho) / (kI * rep.hbar()), p, rep.hbar(), 1);
}

std::vector<double> logspace(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi >= lo) || count < 1) throw Error("logspace: need 0 < lo <= hi and count >= 1");
  std::vector<double> out;
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) {
    out.push_back(count == 1 ? lo : std::exp(a + (b - a) * i / (count - 1)));
  }
  return out;
}

SandwichReport fourier_sandwich(const DensityOperator& rho, const PhaseSpaceRep& rep, double p,
                                const std::vector<double>& xi_samples, double slack_tol, double lower_tol) {
  if (rep.d() != 1) throw Error("fourier_sandwich: requires d = 1");
  if (xi_samples.empty()) throw Error("fourier_sandwich: no xi samples");
  const double hb = rep.hbar();
  SandwichReport r;
  r.gradient_norm = position_commutator_norm(rho.matrix(), rep, p);
  double best = 0.0;
  for (double xi : xi_samples) {
    if (xi == 0.0) throw Error("fourier_sandwich: xi = 0 is not a valid sample");
    const Matrix e = function_of_position(rep, 0, [xi](double x) { return std::exp(kI * (xi * x)); });
    const double ratio = scaled_schatten_norm(commutator(e, rho.matrix()), p, hb, 1) / (hb * std::abs(xi));
    r.xi.push_back(xi);
    r.sample_ratios.push_back(ratio);
    best = std::max(best, ratio);
  }
  const std::string digest = digest_values(xi_samples) + digest_matrices({&rho.matrix()});
  r.upper = make_ratio_report("sandwich_upper", r.gradient_norm, best, Relation::ge, slack_tol, digest);
  r.lower = make_ratio_report("sandwich_lower", best, r.gradient_norm / std::sqrt(static_cast<double>(rep.d())),
                              Relation::ge, lower_tol, digest);
  return r;
}

LipschitzSample check_operator_lipschitz(const DensityOperator& rho, const PhaseSpaceRep& rep,
                                         const std::function<double(double)>& u, double lipschitz, double p) {
  if (rep.d() != 1) throw Error("check_operator_lipschitz: requires d = 1");
  if (!(p > 1.0) || std::isinf(p)) throw Error("check_operator_lipschitz: p must lie in (1, inf)");
  if (!(lipschitz >= 0.0)) throw Error("check_operator_lipschitz: Lipschitz constant must be non-negative");
  const Matrix ux = function_of_position(rep, 0, [&u](double x) { return cplx(u(x), 0.0); });
  LipschitzSample s;
  s.numerator = schatten_norm(commutator(ux, rho.matrix()), p);
  s.denominator = lipschitz * schatten_norm(commutator(rep.x(0).matrix(), rho.matrix()), p);
  if (s.denominator <= kZeroFloor) {
    s.degenerate = true;
    s.ratio = s.numerator <= kZeroFloor ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    s.ratio = s.numerator / s.denominator;
  }
  return s;
}

}  // namespace qskew
