#include "qskew/constants.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cmath>

using namespace qskew;

// Reference digits from a 40-digit mpmath evaluation of the Gamma expressions.
TEST_CASE("C_s against high-precision values") {
  CHECK(std::abs(one_d_constant(0.5).value - 1.197747465333943648559) < 1e-12);
  CHECK(std::abs(one_d_constant(0.25).value - 1.515681511924945633703) < 1e-12);
  CHECK(std::abs(one_d_constant(0.75).value - 1.067278091716796091855) < 1e-12);
}

TEST_CASE("C_s closed forms agree") {
  for (double s : {0.05, 0.25, 0.5, 0.75, 0.95}) {
    const OneDConstant c = one_d_constant(s);
    CHECK(c.residual <= 1e-12);
    CHECK(std::abs(c.gamma_ratio_form - c.reflection_form) <= 1e-12);
  }
  CHECK_THROWS(one_d_constant(0.0));
  CHECK_THROWS(one_d_constant(1.0));
}

TEST_CASE("C_1/2 split into its two summands") {
  const OneDConstant c = one_d_constant(0.5);
  CHECK(std::abs(c.first_term - std::pow(8.0 * M_PI, -0.25)) < 1e-15);
  CHECK(std::abs(c.first_term + c.second_term - c.value) < 1e-15);
  CHECK(std::abs(c.first_term - 0.446622) < 1e-6);
  CHECK(std::abs(c.second_term - 0.751126) < 1e-6);
}

TEST_CASE("printed digits of the constants to 1e-5") {
  CHECK(std::abs(one_d_constant(0.5).value - 1.197753) < 1e-5);
  CHECK(std::abs(sobolev_constant_12(2) - 0.312184) < 1e-5);
  CHECK(std::abs(c_d_interval(2).upper - 0.511655) < 1e-5);
}

TEST_CASE("sharp Sobolev constant against the Aubin-Talenti form") {
  for (int d = 2; d <= 6; ++d) {
    const double n = 2.0 * d;
    const double at = std::sqrt(1.0 / (M_PI * n * (n - 2.0))) * std::pow(std::tgamma(n) / std::tgamma(n / 2.0), 1.0 / n);
    CHECK(std::abs(sobolev_constant_12(d) - at) < 1e-13);
  }
  CHECK(std::abs(sobolev_constant_12(2) - 0.3121892056977779516773) < 1e-12);
  CHECK(std::abs(c_d_interval(2).upper - 0.5116603458984942906473) < 1e-12);
  CHECK_THROWS(sobolev_constant_12(1));
}

TEST_CASE("C_d interval has width (8 pi)^{-1/2}") {
  for (int d = 2; d <= 5; ++d) {
    const ConstantInterval c = c_d_interval(d);
    CHECK(c.lower == sobolev_constant_12(d));
    CHECK(std::abs(c.upper - c.lower - 1.0 / std::sqrt(8.0 * M_PI)) < 1e-15);
  }
}

TEST_CASE("isoperimetric constant") { CHECK(std::abs(sobolev_constant_11_2d() - 0.2820947917738781) < 1e-15); }

TEST_CASE("JSON and text tables carry the same values") {
  const ConstantsTable t = ConstantsTable::compute({2, 3}, {0.5});
  const auto j = nlohmann::json::parse(t.to_json());
  const std::string text = t.to_text();
  CHECK(j["c_s"][0]["value"].get<double>() == t.c_s[0].value);
  CHECK(j["sobolev_12"].size() == 2);
  CHECK(j["sobolev_12"][0]["value"].get<double>() == t.dims[0].sobolev_12);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", t.dims[0].sobolev_12);
  CHECK(text.find(buf) != std::string::npos);
  std::snprintf(buf, sizeof buf, "%.17g", t.c_s[0].value);
  CHECK(text.find(buf) != std::string::npos);
}
