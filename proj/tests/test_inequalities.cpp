#include "qskew/constants.hpp"
#include "qskew/inequalities.hpp"
#include "qskew/random.hpp"
#include "qskew/states.hpp"

#include "doctest.h"

#include <cmath>

using namespace qskew;

TEST_CASE("Heisenberg saturation for the harmonic ground state") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 64, 1.0);
  const RatioReport r = check_heisenberg(ground_state(rep), rep.x(0), rep.p(0));
  CHECK(std::abs(r.lhs - 0.5) < 1e-8);
  CHECK(std::abs(r.rhs - 0.5) < 1e-8);
  CHECK(r.pass);
}

TEST_CASE("Robertson bound on random finite-dimensional draws") {
  PinnedRng rng(4);
  for (int t = 0; t < 50; ++t) {
    const Index dim = 2 + t % 7;
    const DensityOperator rho = sample_random_density(dim, 1 + t % dim, substream_seed(11, t));
    const HermitianOperator a(rng.hermitian(dim)), b(rng.hermitian(dim));
    CHECK(check_heisenberg(rho, a, b).pass);
    const CramerRaoReport c = check_cramer_rao(rho, a, b);
    CHECK(c.pass());
    CHECK(check_hierarchy(rho, a).pass());
  }
}

TEST_CASE("Cramer-Rao equals Heisenberg on pure states") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 40, 1.0);
  const CramerRaoReport c = check_cramer_rao(squeezed_vacuum(rep, 0.5), rep.x(0), rep.p(0));
  CHECK(std::abs(c.bound.lhs - c.heisenberg_lhs) < 1e-9);
  CHECK(c.pass());
}

TEST_CASE("d = 1 ground state at p = 2: ratio 4 pi C_{1/2}^4") {
  const double c = one_d_constant(0.5).value;
  const double expected = 4.0 * kPi * std::pow(c, 4.0);
  for (double hbar : {1.0, 0.1}) {
    const PhaseSpaceRep rep = build_harmonic_rep(1, 64, hbar);
    const RatioReport r = check_theorem_1d(ground_state(rep), rep, 2.0);
    CHECK(std::abs(r.lhs - hbar / 2.0) < 1e-12);
    CHECK(std::abs(r.ratio - expected) < 1e-9 * expected);
    CHECK(std::abs(r.ratio - 25.86) < 0.01);
  }
}

TEST_CASE("d = 1 inequality across families and exponents") {
  for (double hbar : {1.0, 0.1}) {
    const PhaseSpaceRep rep = build_harmonic_rep(1, 48, hbar);
    const std::vector<DensityOperator> states{ground_state(rep), squeezed_vacuum(rep, 0.5), thermal_state(rep, 1.5),
                                              embedded_random_density(rep, 10, 3, 7)};
    for (const auto& rho : states) {
      for (double p : {1.25, 1.5, 2.0, 3.0, 4.0}) CHECK(check_theorem_1d(rho, rep, p).pass);
    }
  }
}

TEST_CASE("scaled-norm route reproduces the direct ratio") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 40, 0.5);
  const DensityOperator rho = embedded_random_density(rep, 8, 2, 3);
  for (double p : {1.5, 2.0, 3.0}) {
    const double direct = check_theorem_1d(rho, rep, p).ratio;
    CHECK(std::abs(theorem_1d_scaled_ratio(rho, rep, p) - direct) < 1e-9 * direct);
  }
}

TEST_CASE("ratio is invariant under squeezing and hbar") {
  const PhaseSpaceRep r1 = build_harmonic_rep(1, 64, 1.0);
  const PhaseSpaceRep r2 = build_harmonic_rep(1, 64, 0.25);
  const double g = check_theorem_1d(ground_state(r1), r1, 3.0).ratio;
  CHECK(std::abs(check_theorem_1d(squeezed_vacuum(r1, 0.6), r1, 3.0).ratio - g) < 1e-6 * g);
  CHECK(std::abs(check_theorem_1d(ground_state(r2), r2, 3.0).ratio - g) < 1e-9 * g);
}

TEST_CASE("d = 2 product ground state") {
  const PhaseSpaceRep rep = build_harmonic_rep(2, 12, 1.0);
  const RatioReport r = check_theorem_d(ground_state(rep), rep);
  CHECK(std::abs(r.lhs - 1.0) < 1e-12);
  CHECK(std::abs(r.rhs - 1.0 / (8.0 * kPi * c_d_interval(2).upper)) < 1e-12);
  CHECK(std::abs(r.rhs - 0.07778) < 1e-4);
  CHECK(r.pass);
  CHECK(check_theorem_d(ground_state(rep), rep, ConstantChoice::lower).pass);
}

TEST_CASE("d = 2 random embedded states") {
  const PhaseSpaceRep rep = build_harmonic_rep(2, 12, 0.5);
  for (std::uint64_t s = 0; s < 4; ++s) CHECK(check_theorem_d(embedded_random_density(rep, 3, 4, s), rep).pass);
}

TEST_CASE("truncation guard fires for states reaching the top level") {
  const PhaseSpaceRep rep = build_harmonic_rep(2, 6, 1.0);
  CHECK_THROWS_AS(check_theorem_d(coherent_state(rep, cplx(1.5, 0.0)), rep), TruncationError);
  CHECK_THROWS(check_theorem_d(ground_state(build_harmonic_rep(1, 8, 1.0)), build_harmonic_rep(1, 8, 1.0)));
}

TEST_CASE("Fourier sandwich brackets the gradient norm") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 32, 1.0);
  const DensityOperator rho = embedded_random_density(rep, 8, 3, 21);
  for (double p : {1.5, 2.0, 4.0}) {
    const SandwichReport s = fourier_sandwich(rho, rep, p, logspace(1e-4, 2.0, 12));
    CHECK(s.upper.pass);
    CHECK(s.lower.pass);
    for (double r : s.sample_ratios) CHECK(r <= s.gradient_norm * (1.0 + 1e-9));
  }
}

TEST_CASE("logspace endpoints") {
  const auto xs = logspace(1e-3, 1.0, 4);
  CHECK(xs.size() == 4);
  CHECK(std::abs(xs.front() - 1e-3) < 1e-18);
  CHECK(std::abs(xs[1] - 1e-2) < 1e-15);
  CHECK(std::abs(xs.back() - 1.0) < 1e-15);
}

TEST_CASE("operator Lipschitz ratio is one for u(x) = x") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 24, 1.0);
  const DensityOperator rho = embedded_random_density(rep, 6, 2, 2);
  for (double p : {1.5, 2.0, 3.0}) {
    const LipschitzSample s = check_operator_lipschitz(rho, rep, [](double x) { return x; }, 1.0, p);
    CHECK(std::abs(s.ratio - 1.0) < 1e-9);
  }
  const LipschitzSample t = check_operator_lipschitz(rho, rep, [](double x) { return std::tanh(x); }, 1.0, 2.0);
  CHECK(t.ratio > 0.0);
  CHECK(std::isfinite(t.ratio));
}

TEST_CASE("ratio report orientation and zero handling") {
  CHECK(make_ratio_report("a", 2.0, 1.0, Relation::ge).ratio == 2.0);
  CHECK(make_ratio_report("a", 2.0, 1.0, Relation::le).ratio == 0.5);
  CHECK(make_ratio_report("a", 0.0, 0.0, Relation::ge).ratio == 1.0);
  CHECK(std::isinf(make_ratio_report("a", 1.0, 0.0, Relation::ge).ratio));
  const RatioReport r = make_ratio_report("a", 1.0, 1.0 + 1e-7, Relation::ge, 1e-6);
  CHECK(r.pass);
  CHECK_FALSE(with_slack(r, 0.0).pass);
}
