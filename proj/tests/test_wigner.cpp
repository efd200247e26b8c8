#include "doctest.h"

#include "qskew/states.hpp"
#include "qskew/symbols.hpp"
#include "qskew/wigner.hpp"

#include <cmath>

using namespace qskew;

namespace {

GridSpec grid256() { return GridSpec::symmetric(12.0, 256, 12.0, 256); }

Index index_of(const GridSpec& g, double x) { return static_cast<Index>(std::llround((x - g.x_min) / g.dx())); }

}  // namespace

TEST_CASE("ground state Wigner function is the phase-space Gaussian") {
  const auto rep = build_harmonic_rep(1, 16, 1.0);
  const auto g = grid256();
  const auto f = wigner_transform(ground_state(rep).matrix(), rep, g);
  const Index j0 = index_of(g, 0.0);
  CHECK(f.values(j0, j0).real() == doctest::Approx(2.0).epsilon(1e-10));
  double err = 0.0;
  for (Index j = 0; j < g.n_x; ++j)
    for (Index k = 0; k < g.n_v; ++k)
      err = std::max(err, std::abs(f.values(j, k) - 2.0 * std::exp(-(g.x(j) * g.x(j) + g.v(k) * g.v(k)))));
  CHECK(err < 1e-10);
  CHECK(f.l2_norm() * f.l2_norm() == doctest::Approx(2.0 * kPi).epsilon(1e-8));
}

TEST_CASE("first excited state is negative at the origin") {
  const auto rep = build_harmonic_rep(1, 16, 1.0);
  const auto g = grid256();
  const auto f = wigner_transform(number_state(rep, 1).matrix(), rep, g);
  const Index j0 = index_of(g, 0.0);
  CHECK(f.values(j0, j0).real() == doctest::Approx(-2.0).epsilon(1e-10));
}

TEST_CASE("isometry, round trip and gradient correspondence for eigenstates") {
  const auto rep = build_harmonic_rep(1, 16, 1.0);
  const auto g = grid256();
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    const Matrix rho = number_state(rep, n).matrix();
    const auto f = wigner_transform(rho, rep, g);
    const double expect = std::sqrt(rep.h()) * rho.norm();
    CHECK(std::abs(f.l2_norm() - expect) / expect < 1e-6);
    const Matrix back = weyl_quantize(f, rep);
    CHECK((back - rho).norm() < 1e-6);
    const auto grad = quantum_gradient(rho, rep);
    const auto fdx = wigner_transform(grad.dx[0], rep, g);
    const auto fdv = wigner_transform(grad.dv[0], rep, g);
    CHECK(relative_l2_error(field_derivative(f, 1), fdx) < 1e-5);
    CHECK(relative_l2_error(field_derivative(f, 0), fdv) < 1e-5);
  }
}

TEST_CASE("Wigner transform of a quantized symbol returns the symbol") {
  const auto rep = build_harmonic_rep(1, 96, 1.0);
  const auto g = GridSpec::symmetric(14.0, 256, 14.0, 256);
  PinnedRng rng(12);
  const GaussianTrigSymbol a = SymbolEnsemble{}.sample(rng);
  const Matrix m = a.weyl_quantize(rep);
  CHECK((m - m.adjoint()).norm() < 1e-12 * m.norm());
  const auto f = wigner_transform(m, rep, g);
  double err = 0.0, scale = 0.0;
  for (Index j = 0; j < g.n_x; ++j) {
    for (Index k = 0; k < g.n_v; ++k) {
      if (g.x(j) * g.x(j) + g.v(k) * g.v(k) > 9.0) continue;
      err = std::max(err, std::abs(f.values(j, k) - a.value(g.x(j), g.v(k))));
      scale = std::max(scale, std::abs(a.value(g.x(j), g.v(k))));
    }
  }
  CHECK(err < 1e-8 * scale);
}
