#include "qskew/phase_space.hpp"
#include "qskew/states.hpp"

#include "doctest.h"

#include <cmath>

using namespace qskew;

TEST_CASE("canonical commutator away from the truncation corner") {
  for (double hbar : {1.0, 0.3}) {
    const PhaseSpaceRep rep = build_harmonic_rep(1, 20, hbar);
    const Matrix c = commutator(rep.x(0).matrix(), rep.p(0).matrix());
    const Matrix block = c.topLeftCorner(19, 19);
    CHECK((block - kI * hbar * Matrix::Identity(19, 19)).norm() < 1e-12);
    // Trace of a commutator vanishes, so the corner carries -i hbar (N-1).
    CHECK(std::abs(c(19, 19) - cplx(0.0, -hbar * 19.0)) < 1e-10);
  }
}

TEST_CASE("two-axis representation: axes commute") {
  const PhaseSpaceRep rep = build_harmonic_rep(2, 6, 1.0);
  CHECK(rep.dim() == 36);
  CHECK(commutator(rep.x(0).matrix(), rep.p(1).matrix()).norm() < 1e-12);
  CHECK(commutator(rep.x(0).matrix(), rep.x(1).matrix()).norm() < 1e-12);
  CHECK(rep.levels(7) == std::vector<int>{1, 1});
  CHECK_THROWS(build_harmonic_rep(3, 20, 1.0, 1000));
  CHECK_THROWS(build_harmonic_rep(1, 8, -1.0));
}

TEST_CASE("quantum gradient of x and p") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 12, 0.5);
  const QuantumGradient gx = quantum_gradient(rep.x(0).matrix(), rep);
  CHECK(gx.dx[0].norm() < 1e-12);
  CHECK((gx.dv[0] - Matrix::Identity(12, 12)).topLeftCorner(11, 11).norm() < 1e-12);
  const QuantumGradient gp = quantum_gradient(rep.p(0).matrix(), rep);
  CHECK((gp.dx[0] - Matrix::Identity(12, 12)).topLeftCorner(11, 11).norm() < 1e-12);
  CHECK(gp.dv[0].norm() < 1e-12);
}

TEST_CASE("iterated gradients: order one matches the gradient norm") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 16, 1.0);
  const DensityOperator rho = embedded_random_density(rep, 4, 2, 5);
  const double direct = quantum_gradient(rho.matrix(), rep).norm(2.0);
  CHECK(std::abs(iterated_gradient_norm(rho.matrix(), rep, 1, 2.0) - direct) < 1e-12 * direct);
  CHECK(iterated_gradient_components(rho.matrix(), rep, 2).size() == 4);
  CHECK_THROWS(iterated_gradient_components(rho.matrix(), rep, kMaxGradientOrder + 1));
}

TEST_CASE("edge mass diagnostic") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 10, 1.0);
  CHECK(edge_mass(ground_state(rep).matrix(), rep) == 0.0);
  CHECK(edge_mass(number_state(rep, 9).matrix(), rep) == doctest::Approx(1.0));
  CHECK_THROWS_AS(require_small_edge_mass(number_state(rep, 9).matrix(), rep), TruncationError);
  CHECK_NOTHROW(require_small_edge_mass(ground_state(rep).matrix(), rep));
}

TEST_CASE("functions of position reduce to x for the identity map") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 10, 1.0);
  const Matrix ux = function_of_position(rep, 0, [](double x) { return cplx(x, 0.0); });
  CHECK((ux - rep.x(0).matrix()).norm() < 1e-12);
}

TEST_CASE("named states") {
  const PhaseSpaceRep rep = build_harmonic_rep(1, 40, 1.0);
  const DensityOperator sq = squeezed_vacuum(rep, 0.5);
  const cplx mx = (sq.matrix() * rep.x(0).matrix() * rep.x(0).matrix()).trace();
  const cplx mp = (sq.matrix() * rep.p(0).matrix() * rep.p(0).matrix()).trace();
  CHECK(std::abs(mx.real() - 0.25) < 1e-10);
  CHECK(std::abs(mp.real() - 1.0) < 1e-10);
  const DensityOperator coh = coherent_state(rep, cplx(1.0, 0.5));
  const cplx ex = (coh.matrix() * rep.x(0).matrix()).trace();
  CHECK(std::abs(ex.real() - std::sqrt(2.0) * 1.0) < 1e-10);
  const DensityOperator th = thermal_state(rep, 1.0);
  CHECK(std::abs(th.matrix()(1, 1).real() / th.matrix()(0, 0).real() - std::exp(-1.0)) < 1e-12);
  CHECK(edge_mass(embedded_random_density(rep, 5, 2, 1).matrix(), rep) == 0.0);
}
