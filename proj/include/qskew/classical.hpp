// classical.hpp: commutative phase-space lab: Poisson brackets, Sobolev norms, classical inequalities
//
// Fields live on the periodic (x, v) grids of wigner.hpp and are differentiated
// spectrally, so every field must decay to (numerically) zero at the boundary.

#pragma once

#include "qskew/report.hpp"
#include "qskew/wigner.hpp"

#include <functional>
#include <string>
#include <utility>

namespace qskew {

inline constexpr double kBoundaryDecayTol = 1e-10;

// Real samples g(x_j, v_k).
struct GridField2D {
  GridSpec grid;
  RealMatrix values;

  double integral() const;
  double lp_norm(double p) const;
};

// Closed-form field with closed-form partial derivatives.
struct AnalyticField {
  std::function<double(double, double)> value;
  std::function<double(double, double)> d_x;
  std::function<double(double, double)> d_v;

  GridField2D sample(const GridSpec& grid) const;
};

// Values and first derivatives on a grid; analytic fields carry exact
// derivatives, sampled fields spectral ones.
struct DifferentiatedField {
  GridSpec grid;
  RealMatrix value, dx, dv;

  static DifferentiatedField from_analytic(const AnalyticField& f, const GridSpec& grid);
  // Throws when the field does not decay at the boundary.
  static DifferentiatedField from_samples(const GridField2D& f, double decay_tol = kBoundaryDecayTol);
};

// Largest boundary magnitude relative to the largest interior magnitude.
double boundary_ratio(const GridField2D& f);
void require_boundary_decay(const GridField2D& f, double tol = kBoundaryDecayTol);

// {g, f} = d_x g d_v f - d_v g d_x f.
GridField2D poisson_bracket(const DifferentiatedField& g, const DifferentiatedField& f);
GridField2D poisson_bracket(const GridField2D& g, const GridField2D& f);

// (sum |omega|^{2s} |g^(omega)|^2)^{1/2} with physical angular wavenumbers;
// s = 0 is the L^2 norm and s = 1 the L^2 norm of the gradient. Throws when
// more than `alias_tol` of the spectral mass sits in the outer 10% band.
double sobolev_norm(const GridField2D& g, double s, double alias_tol = 1e-8);

// Normalized isotropic or anisotropic Gaussian probability density.
AnalyticField gaussian_density(double sigma_x, double sigma_v);

// sqrt of the samples, differentiated spectrally.
DifferentiatedField sqrt_density(const GridField2D& f);

// d = 1 route: C_s^{-2} ||f||_{L^p} <= 2^s ||d_x sqrt f||_2^s ||d_v sqrt f||_2^s ||f||_1^{1/p}.
RatioReport check_classical_sobolev_scaling(const GridField2D& f, double p, double slack_tol = kTruncatedSlack);
// Closed-form value of the ratio above for any Gaussian: C_s^2 pi^s p^{1/p}.
double gaussian_sobolev_scaling_ratio(double p);
// Ratio of 2 C^2 ||grad_x sqrt f|| ||grad_v sqrt f|| to ||f||_{d/(d-1)} for a
// Gaussian on R^{2d}, C = C^S_{1,2}(d): pi d C^2 q^{d-1} with q = d/(d-1).
double gaussian_sobolev_ratio(int d);

// Pair (alpha, beta) with {alpha, beta} != 0, plus the inverse map.
struct DiffeoPair {
  std::string name;
  AnalyticField alpha;
  AnalyticField beta;
  std::function<std::pair<double, double>(double, double)> inverse;

  double jacobian(double x, double v) const;

  static DiffeoPair rotation(double theta);
  // (x, v + c x).
  static DiffeoPair shear(double c);
  // (x + c x^3 / 3, v), c >= 0.
  static DiffeoPair stretch(double c);
  static DiffeoPair by_name(const std::string& name, double param);
};

enum class UncertaintyConvention { as_stated, chain_rule_corrected };
std::string to_string(UncertaintyConvention c);

// k ∫ |{alpha, beta}| f^2 <= ||{alpha, sqrt f}||_2 ||{beta, sqrt f}||_2 with
// k = 1/(2 C^2) as stated, or 1/(8 C^2) after {alpha, f} = 2 sqrt(f) {alpha, sqrt f};
// C = C^S_{1,1} = 1/(2 sqrt(pi)).
RatioReport check_classical_uncertainty_1d(const GridField2D& f, const DiffeoPair& pair,
                                           UncertaintyConvention convention, double slack_tol = kTruncatedSlack);

// ||{alpha, beta}||_p against the Hölder-type bounds, with 1/p = 1/q + 1/r.
struct BracketHolderReport {
  RatioReport holder;         // ||d_x a||_q ||d_v b||_r + ||d_v a||_q ||d_x b||_r
  RatioReport gradient_form;  // || |grad a| ||_q || |grad b| ||_r
  RatioReport product_form;   // squared, against 2 ||d_x a|| ||d_v a|| ||d_v b|| ||d_x b||; not an assertion
  bool pass() const { return holder.pass && gradient_form.pass; }
};
BracketHolderReport check_bracket_holder(const DifferentiatedField& a, const DifferentiatedField& b, double p,
                                         double q, double r, double slack_tol = kExactSlack);

// Both sides of the change of variables ∫ |f∘Phi^{-1}|^q = ∫ |{alpha,beta}| |f|^q.
struct ChangeOfVariables {
  double direct = 0.0;       // ||f∘Phi^{-1}||_q on the grid
  double transformed = 0.0;  // || |{alpha,beta}|^{1/q} f ||_q on the grid
  double relative_error() const;
};
ChangeOfVariables change_of_variables(const AnalyticField& f, const DiffeoPair& pair, double q,
                                      const GridSpec& grid);

}  // namespace qskew
