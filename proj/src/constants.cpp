#include "qskew/constants.hpp"

#include "qskew/types.hpp"

#include "json.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdio>
#include <sstream>

namespace qskew {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

Real pi50() { return boost::math::constants::pi<Real>(); }

}  // namespace

double sobolev_constant_12(int d) {
  if (d < 2) throw Error("sobolev_constant_12: d must be >= 2 (the formula divides by d - 1)");
  const Real dd = d;
  const Real pi = pi50();
  const Real g = boost::math::tgamma(dd + Real(0.5));
  const Real sq = pow(4 * pi, -1 / (2 * dd)) * pow(g, 1 / dd) / (dd * (dd - 1) * pi);
  return static_cast<double>(sqrt(sq));
}

ConstantInterval c_d_interval(int d) {
  const double c = sobolev_constant_12(d);
  const Real extra = 1 / sqrt(8 * pi50());
  return {c, static_cast<double>(Real(c) + extra)};
}

OneDConstant one_d_constant(double s_in) {
  if (!(s_in > 0.0 && s_in < 1.0)) throw Error("one_d_constant: s must lie in (0, 1)");
  const Real s = s_in;
  const Real pi = pi50();
  const Real first = pow(8 * pi, -s / 2);
  const Real ratio_term = pow(Real(2), -s) * pow(pi, -s / 2) *
                          sqrt(boost::math::tgamma(1 - s) / boost::math::tgamma(1 + s));
  const Real refl_term =
      pow(pi, (1 - s) / 2) / (pow(Real(2), s) * sqrt(sin(pi * s)) * boost::math::tgamma(s) * sqrt(s));
  OneDConstant c;
  c.s = s_in;
  c.first_term = static_cast<double>(first);
  c.second_term = static_cast<double>(refl_term);
  c.gamma_ratio_form = static_cast<double>(first + ratio_term);
  c.reflection_form = static_cast<double>(first + refl_term);
  c.value = static_cast<double>(first + (ratio_term + refl_term) / 2);
  c.residual = static_cast<double>(abs(ratio_term - refl_term));
  return c;
}

double sobolev_constant_11_2d() { return static_cast<double>(1 / (2 * sqrt(pi50()))); }

ConstantsTable ConstantsTable::compute(const std::vector<int>& dims, const std::vector<double>& s_values) {
  ConstantsTable t;
  for (int d : dims) t.dims.push_back({d, sobolev_constant_12(d), c_d_interval(d)});
  for (double s : s_values) t.c_s.push_back(one_d_constant(s));
  t.sobolev_11_2d = sobolev_constant_11_2d();
  return t;
}

std::string ConstantsTable::to_json() const {
  nlohmann::json j;
  j["sobolev_12"] = nlohmann::json::array();
  for (const auto& r : dims) {
    j["sobolev_12"].push_back(
        {{"d", r.d}, {"value", r.sobolev_12}, {"c_d_lower", r.c_d.lower}, {"c_d_upper", r.c_d.upper}});
  }
  j["c_s"] = nlohmann::json::array();
  for (const auto& c : c_s) {
    j["c_s"].push_back({{"s", c.s},
                        {"value", c.value},
                        {"gamma_ratio_form", c.gamma_ratio_form},
                        {"reflection_form", c.reflection_form},
                        {"residual", c.residual}});
  }
  j["sobolev_11_2d"] = sobolev_11_2d;
  return j.dump(2);
}

std::string ConstantsTable::to_text() const {
  std::ostringstream os;
  char buf[256];
  os << "d   C^S_{1,2}            C_d lower            C_d upper\n";
  for (const auto& r : dims) {
    std::snprintf(buf, sizeof buf, "%-3d %.17g  %.17g  %.17g\n", r.d, r.sobolev_12, r.c_d.lower, r.c_d.upper);
    os << buf;
  }
  os << "\ns     C_s                  gamma-ratio form     reflection form      residual\n";
  for (const auto& c : c_s) {
    std::snprintf(buf, sizeof buf, "%-5g %.17g  %.17g  %.17g  %.3g\n", c.s, c.value, c.gamma_ratio_form,
                  c.reflection_form, c.residual);
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "\nC^S_{1,1} (R^2) = %.17g\n", sobolev_11_2d);
  os << buf;
  return os.str();
}

}  // namespace qskew
