// inequalities.hpp: checkers for the proved uncertainty and Sobolev-type inequalities

#pragma once

#include "qskew/info_measures.hpp"
#include "qskew/phase_space.hpp"
#include "qskew/report.hpp"

#include <functional>
#include <vector>

namespace qskew {

// sigma_A sigma_B >= |Tr([A,B] rho)| / 2.
RatioReport check_heisenberg(const DensityOperator& rho, const HermitianOperator& a, const HermitianOperator& b,
                             double slack_tol = kExactSlack);

// sigma^2 >= J/4 and J/4 >= I.
struct HierarchyReport {
  RatioReport variance_vs_sld;
  RatioReport sld_vs_skew;
  bool pass() const { return variance_vs_sld.pass && sld_vs_skew.pass; }
};
HierarchyReport check_hierarchy(const DensityOperator& rho, const HermitianOperator& k,
                                double slack_tol = kExactSlack);

// sigma_A sqrt(J_B / 4) >= |Tr([A,B] rho)| / 2, together with the comparison
// against the Heisenberg left side (J_B/4 <= sigma_B^2).
struct CramerRaoReport {
  RatioReport bound;
  double heisenberg_lhs = 0.0;
  bool improves_heisenberg = false;
  bool pass() const { return bound.pass && improves_heisenberg; }
};
CramerRaoReport check_cramer_rao(const DensityOperator& rho, const HermitianOperator& a,
                                 const HermitianOperator& b, double slack_tol = kExactSlack);

enum class ConstantChoice { upper, lower };

// sqrt(I_x I_p) >= hbar / (8 pi C_d) ||rho||_{d/(d-1)} for d >= 2. The upper
// end of the C_d interval (default) makes the check conservative. Throws
// TruncationError when sqrt(rho) reaches the top retained level.
RatioReport check_theorem_d(const DensityOperator& rho, const PhaseSpaceRep& rep,
                            ConstantChoice constant = ConstantChoice::upper, double slack_tol = kTruncatedSlack);

// sqrt(I_x I_p) >= hbar / (8 pi C_s^{2p'}) ||rho||_p^{p'} in d = 1, s = 1 - 1/p.
RatioReport check_theorem_1d(const DensityOperator& rho, const PhaseSpaceRep& rep, double p,
                             double slack_tol = kTruncatedSlack);

// The same ratio assembled from scaled norms:
// C_s^{-2} ||rho||_{L^p} <= 2^s ||grad_x sqrt(rho)||_{L^2}^s ||grad_v sqrt(rho)||_{L^2}^s ||rho||_{L^1}^{1/p},
// raised to the power p'.
double theorem_1d_scaled_ratio(const DensityOperator& rho, const PhaseSpaceRep& rep, double p);

// ||(1/(i hbar))[x, rho]||_{L^p}: the gradient norm bracketed by the Fourier sandwich.
double position_commutator_norm(const Matrix& rho, const PhaseSpaceRep& rep, double p);

// For d = 1 and each xi: ||[exp(i xi x), rho]||_{L^p} / (hbar |xi|). The upper
// bound (every sample <= the gradient norm) is exact on the truncation; the
// lower bound compares the sampled maximum with the gradient norm / sqrt(d).
struct SandwichReport {
  RatioReport upper;
  RatioReport lower;
  double gradient_norm = 0.0;
  std::vector<double> xi;
  std::vector<double> sample_ratios;
};
SandwichReport fourier_sandwich(const DensityOperator& rho, const PhaseSpaceRep& rep, double p,
                                const std::vector<double>& xi_samples, double slack_tol = kExactSlack,
                                double lower_tol = 1e-3);

// Log-spaced samples on [lo, hi].
std::vector<double> logspace(double lo, double hi, int count);

// ||[u(x), rho]||_{L^p} / (hbar Lip(u) ||(1/(i hbar))[x, rho]||_{L^p}); the best
// constant is unknown, so this is a statistic. Scale factors h^{1/p} cancel.
struct LipschitzSample {
  double numerator = 0.0;    // ||[u(x), rho]||_p
  double denominator = 0.0;  // Lip(u) ||[x, rho]||_p
  double ratio = 0.0;        // +inf when only the denominator vanishes
  bool degenerate = false;   // denominator vanished
};
LipschitzSample check_operator_lipschitz(const DensityOperator& rho, const PhaseSpaceRep& rep,
                                         const std::function<double(double)>& u, double lipschitz, double p);

}  // namespace qskew
