// symbols.hpp: Gaussian-enveloped trigonometric phase-space symbols and their Weyl quantization
//
//   a(x, v) = exp(-(x^2 + v^2) / (2 w^2)) * sum_m c_m cos(k_m x + l_m v + phi_m)
//
// The v-integral of the Weyl kernel is done in closed form,
//   A(q, q') = (1/h) ∫ a((q + q')/2, v) exp(i (q - q') v / hbar) dv,
// leaving a position quadrature against the Hermite functions.

#pragma once

#include "qskew/phase_space.hpp"
#include "qskew/random.hpp"

#include <string>
#include <vector>

namespace qskew {

struct TrigMode {
  double k = 0.0;  // x wavenumber
  double l = 0.0;  // v wavenumber
  double phase = 0.0;
  double coeff = 0.0;
};

class GaussianTrigSymbol {
 public:
  GaussianTrigSymbol(double width, std::vector<TrigMode> modes);

  double width() const noexcept { return width_; }
  const std::vector<TrigMode>& modes() const noexcept { return modes_; }

  double value(double x, double v) const;
  double d_x(double x, double v) const;
  double d_v(double x, double v) const;

  // Largest |k| + |l| over the modes.
  double max_wavenumber() const;

  // P A P on the first N Hermite functions of a d = 1 representation.
  Matrix weyl_quantize(const PhaseSpaceRep& rep) const;

 private:
  double width_;
  std::vector<TrigMode> modes_;
};

// Random symbols: modes on the integer lattice {0..modes_per_axis-1}^2 scaled
// by `fundamental`, coefficients N(0, decay^(2(m_x + m_v))), uniform phases.
struct SymbolEnsemble {
  int modes_per_axis = 3;
  double fundamental = 0.5;
  double decay = 0.5;
  double width = 1.5;

  GaussianTrigSymbol sample(PinnedRng& rng) const;
  std::string describe() const;
};

}  // namespace qskew
