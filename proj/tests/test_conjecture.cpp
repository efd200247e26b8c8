#include "qskew/conjecture.hpp"
#include "qskew/inequalities.hpp"
#include "qskew/states.hpp"

#include "doctest.h"

#include <cmath>
#include <filesystem>

using namespace qskew;

TEST_CASE("scaling optimum in closed form") {
  const ScalingOptimum a = optimize_scaling(1.0, 1.0, 1.0);
  CHECK(a.lambda == doctest::Approx(1.0));
  CHECK(a.value == doctest::Approx(2.0));
  const ScalingOptimum b = optimize_scaling(4.0, 1.0, 1.0);
  CHECK(b.lambda == doctest::Approx(0.5));
  CHECK(b.value == doctest::Approx(4.0));
  CHECK(optimize_scaling(1.0, 4.0, 1.0).value == b.value);
  CHECK_THROWS(optimize_scaling(0.0, 1.0, 1.0));
  CHECK_THROWS(optimize_scaling(1.0, 1.0, -1.0));
}

TEST_CASE("scaling optimum: stationarity and minimality") {
  for (double a : {0.3, 1.0, 7.0}) {
    for (double b : {0.2, 2.0, 11.0}) {
      for (double e : {0.5, 1.0, 2.5}) {
        const ScalingOptimum o = optimize_scaling(a, b, e);
        const double l = o.lambda;
        const double deriv = e * std::pow(l, e - 1.0) * a - e * std::pow(l, -e - 1.0) * b;
        CHECK(std::abs(deriv) <= 1e-12 * (a + b) * std::max(1.0, e / l));
        const double at = std::pow(l, e) * a + std::pow(l, -e) * b;
        CHECK(std::abs(at - o.value) < 1e-12 * o.value);
        CHECK(std::pow(1.1 * l, e) * a + std::pow(1.1 * l, -e) * b >= o.value);
        CHECK(std::abs(o.value - 2.0 * std::sqrt(a * b)) < 1e-14 * o.value);
      }
    }
  }
}

TEST_CASE("skew objective: homogeneity and unitary invariance") {
  PinnedRng rng(31);
  for (int t = 0; t < 10; ++t) {
    const Index n = 3 + t % 4;
    const DensityOperator rho = sample_random_density(n, n, substream_seed(3, t));
    const HermitianOperator a(rng.hermitian(n)), b(rng.hermitian(n));
    const double base = skew_violation_objective(rho, a, b).ratio;
    const double scaled =
        skew_violation_objective(rho, HermitianOperator(2.5 * a.matrix()), HermitianOperator(0.3 * b.matrix())).ratio;
    CHECK(std::abs(scaled - base) < 1e-9 * base);
    const Matrix u = rng.unitary(n);
    const double rotated =
        skew_violation_objective(DensityOperator(HermitianOperator(u * rho.matrix() * u.adjoint())),
                                 HermitianOperator(u * a.matrix() * u.adjoint()),
                                 HermitianOperator(u * b.matrix() * u.adjoint()))
            .ratio;
    CHECK(std::abs(rotated - base) < 1e-9 * base);
  }
}

TEST_CASE("skew objective: both evaluation paths agree") {
  PinnedRng rng(2);
  const DensityOperator rho = sample_random_density(5, 3, 4);
  const HermitianOperator a(rng.hermitian(5)), b(rng.hermitian(5));
  const double c = skew_violation_objective(rho, a, b, SkewMethod::commutator).ratio;
  const double s = skew_violation_objective(rho, a, b, SkewMethod::spectral).ratio;
  CHECK(std::abs(c - s) < 1e-10 * c);
}

TEST_CASE("search finds and stores a re-verifiable violation") {
  const SearchResult r = search_skew_violation(3, 6000, 5, 4);
  CHECK(r.converged);
  CHECK(r.best_ratio < 1.0 - kViolationMargin);
  CHECK(r.iterations == 6000);
  CHECK(std::abs(reverify_witness(r) - r.best_ratio) < 1e-10);
  const SkewObjective o = skew_violation_objective(r.witness_state, r.witness_a, r.witness_b);
  CHECK(std::sqrt(o.skew_a * o.skew_b) < (1.0 - 1e-6) * o.half_commutator);

  const auto dir = std::filesystem::temp_directory_path() / "qskew_test_witness";
  std::filesystem::remove_all(dir);
  save_witness(r, dir.string());
  const SearchResult back = load_witness(dir.string());
  CHECK(back.best_ratio == r.best_ratio);
  CHECK(back.witness_state.matrix() == r.witness_state.matrix());
  CHECK(back.witness_a.matrix() == r.witness_a.matrix());
  CHECK(skew_violation_objective(back.witness_state, back.witness_a, back.witness_b).ratio == r.best_ratio);
  std::filesystem::remove_all(dir);
}

TEST_CASE("search is deterministic and respects the budget") {
  const SearchResult a = search_skew_violation(3, 2000, 9, 3);
  const SearchResult b = search_skew_violation(3, 2000, 9, 3, 2);
  CHECK(a.best_ratio == b.best_ratio);
  CHECK(a.to_json() == b.to_json());
  const SearchResult z = search_skew_violation(3, 0, 9, 3);
  CHECK_FALSE(z.converged);
  CHECK(z.iterations == 0);
  CHECK(std::isfinite(z.best_ratio));
  CHECK_THROWS(search_skew_violation(1, 10, 1));
  CHECK_THROWS(search_skew_violation(3, -1, 1));
}

TEST_CASE("conjectured operator inequality: (x, p) reduction") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 32, 0.5);
  const DensityOperator rho = thermal_state(rep, 1.0);
  const Conjecture31Value v = conjecture_31_ratio(rho, rep.x(0), rep.p(0));
  const Matrix root = matrix_sqrt_psd(rho).matrix();
  const double expected = 0.5 * rho.matrix().squaredNorm() /
                          (commutator(rep.x(0).matrix(), root).norm() * commutator(rep.p(0).matrix(), root).norm());
  CHECK(std::abs(v.ratio - expected) < 1e-8 * expected);
  CHECK(std::abs(v.lhs - v.lhs_trace) < 1e-12);
  CHECK(std::isfinite(v.ratio));
}

TEST_CASE("conjectured operator inequality: A = B and commuting pairs") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 16, 1.0);
  const Conjecture31Value same = conjecture_31_ratio(ground_state(rep), rep.x(0), rep.x(0));
  CHECK(same.lhs == 0.0);
  const DensityOperator rho = number_state(rep, 2);
  const HermitianOperator n(rho.matrix());
  CHECK(conjecture_31_ratio(rho, n, rep.x(0)).skipped);
}

TEST_CASE("conjecture ensemble: argmax regenerates") {
  Conjecture31Config cfg;
  cfg.hbars = {1.0, 0.5};
  cfg.n = 24;
  cfg.random_states = 2;
  const EmpiricalConstant c = estimate_conjecture_31(cfg);
  CHECK(c.sample_count + c.skipped == conjecture_31_sample_count(cfg));
  CHECK(c.overall.max_ratio >= c.overall.q99);
  CHECK(c.overall.q99 >= c.overall.q90);
  CHECK(c.overall.q90 >= c.overall.q50);
  CHECK(c.per_group.size() == 2);
  const std::size_t idx = std::stoul(c.argmax.label.substr(6));
  CHECK(std::abs(*conjecture_31_sample(cfg, idx) - c.overall.max_ratio) < 1e-10);
}

TEST_CASE("quantum Hölder ratio: zero for B = A, exponent checks") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 16, 1.0);
  PinnedRng rng(4);
  const Matrix a = SymbolEnsemble{}.sample(rng).weyl_quantize(rep);
  CHECK(quantum_holder_ratio(a, a, rep, 2.0, 4.0, 4.0) < 1e-12);
  CHECK_THROWS(quantum_holder_ratio(a, a, rep, 2.0, 3.0, 4.0));
  CHECK_THROWS(quantum_holder_ratio(a, a, rep, 1.0, 2.0, 2.0));
}

TEST_CASE("quantum Hölder and operator Lipschitz share the commutator numerator") {
  // A = u(x) and B = rho: ||[A, rho]||_p is the Lipschitz numerator; with q
  // large, ||grad u(x)||_q tends to Lip(u) times ||1||_q, so compare the
  // numerators directly on shared samples.
  const PhaseSpaceRep rep = build_harmonic_rep(1, 24, 1.0);
  const DensityOperator rho = embedded_random_density(rep, 6, 3, 8);
  const auto u = [](double x) { return std::tanh(x); };
  const Matrix ux = function_of_position(rep, 0, [&](double x) { return cplx(u(x), 0.0); });
  for (double p : {1.5, 2.0, 3.0}) {
    const LipschitzSample s = check_operator_lipschitz(rho, rep, u, 1.0, p);
    CHECK(std::abs(s.numerator - schatten_norm(commutator(ux, rho.matrix()), p)) < 1e-8 * s.numerator);
  }
}

TEST_CASE("weak Hölder: degenerate identity, homogeneity, order guard") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 24, 1.0);
  PinnedRng rng(6);
  const SymbolEnsemble ens;
  const Matrix a = ens.sample(rng).weyl_quantize(rep);
  const Matrix b = ens.sample(rng).weyl_quantize(rep);
  CHECK(check_weak_holder(Matrix::Identity(24, 24), b, rep, 2, 2.0).degenerate);
  const WeakHolderValue v = check_weak_holder(a, b, rep, 2, 2.0);
  CHECK_FALSE(v.degenerate);
  CHECK(std::isfinite(v.ratio));
  const WeakHolderValue w = check_weak_holder(3.0 * a, b, rep, 2, 2.0);
  CHECK(std::abs(w.ratio - v.ratio) < 1e-10 * v.ratio);
  CHECK_THROWS(check_weak_holder(a, b, rep, 1, 2.0));
  CHECK_THROWS(check_weak_holder(a, b, rep, kMaxGradientOrder, 2.0));
}

TEST_CASE("estimators: per-cell tables, argmax regeneration, refinement") {
  HolderConfig h;
  h.cells = {{1.0, 16}, {1.0, 32}};
  h.samples = 3;
  const EmpiricalConstant c = estimate_quantum_holder(h);
  CHECK(c.per_group.size() == 2);
  CHECK(refinement_change(c, h.cells) < 0.1);
  const std::size_t idx = std::stoul(c.argmax.label.substr(6));
  CHECK(std::abs(*quantum_holder_sample(h, idx) - c.overall.max_ratio) < 1e-10);

  WeakHolderConfig w;
  w.cells = {{1.0, 32}, {1.0, 64}};
  w.samples = 2;
  const EmpiricalConstant e = estimate_weak_holder(w);
  CHECK(refinement_change(e, w.cells) < 0.1);

  LipschitzConfig l;
  l.samples = 3;
  l.n = 16;
  const EmpiricalConstant lip = estimate_operator_lipschitz(l);
  CHECK(lip.per_group.size() == 3);
  CHECK(lip.overall.max_ratio > 0.0);

  HolderConfig bad;
  bad.cells.clear();
  CHECK_THROWS(estimate_quantum_holder(bad));
}
