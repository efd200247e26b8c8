// constants.hpp: closed-form constants of the quantum Sobolev and uncertainty inequalities
//
// Gamma-function expressions are evaluated in 50-digit binary floating point
// (Boost.Multiprecision) and rounded to double at the end.

#pragma once

#include <string>
#include <vector>

namespace qskew {

// Optimal constant of the Sobolev embedding H^1(R^{2d}) -> L^{2d/(d-1)}:
// C^2 = (4 pi)^{-1/(2d)} Gamma(d + 1/2)^{1/d} / (d (d-1) pi). Requires d >= 2.
double sobolev_constant_12(int d);

// Interval [C^S_{1,2}, C^S_{1,2} + (8 pi)^{-1/2}] containing C_d.
struct ConstantInterval {
  double lower = 0.0;
  double upper = 0.0;
};
ConstantInterval c_d_interval(int d);

// C_s for s in (0, 1), evaluated twice:
//   gamma-ratio form: (8 pi)^{-s/2} + 2^{-s} pi^{-s/2} (Gamma(1-s)/Gamma(1+s))^{1/2}
//   reflection form:  (8 pi)^{-s/2} + pi^{(1-s)/2} / (2^s sin(pi s)^{1/2} Gamma(s) sqrt(s))
struct OneDConstant {
  double s = 0.0;
  double gamma_ratio_form = 0.0;
  double reflection_form = 0.0;
  double value = 0.0;     // mean of the two forms
  double residual = 0.0;  // |gamma_ratio_form - reflection_form|
  double first_term = 0.0;
  double second_term = 0.0;  // reflection-form second summand
};
OneDConstant one_d_constant(double s);

// Sharp L^1 Sobolev (isoperimetric) constant in R^2: 1/(2 sqrt(pi)).
double sobolev_constant_11_2d();

struct ConstantsRow {
  int d = 0;
  double sobolev_12 = 0.0;
  ConstantInterval c_d;
};

struct ConstantsTable {
  std::vector<ConstantsRow> dims;
  std::vector<OneDConstant> c_s;
  double sobolev_11_2d = 0.0;

  static ConstantsTable compute(const std::vector<int>& dims, const std::vector<double>& s_values);
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace qskew
