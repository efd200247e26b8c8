// states.hpp: named state families on a harmonic representation

#pragma once

#include "qskew/phase_space.hpp"

#include <cstdint>
#include <string>

namespace qskew {

// |n><n| on every axis.
DensityOperator number_state(const PhaseSpaceRep& rep, int n);
DensityOperator ground_state(const PhaseSpaceRep& rep);

// Product of truncated thermal states rho ∝ sum_n exp(-beta n) |n><n|.
DensityOperator thermal_state(const PhaseSpaceRep& rep, double beta);

// Product of squeezed vacua with position variance hbar*s/2 and momentum
// variance hbar/(2s) per axis.
DensityOperator squeezed_vacuum(const PhaseSpaceRep& rep, double s);
Vector squeezed_vacuum_vector(int n, double s);

// Product of coherent states with amplitude alpha on every axis.
DensityOperator coherent_state(const PhaseSpaceRep& rep, cplx alpha);

// Random density supported on the lowest `support` levels of every axis, so
// that its truncation edge mass vanishes.
DensityOperator embedded_random_density(const PhaseSpaceRep& rep, int support, Index rank,
                                        std::uint64_t seed);

// Pure state from a single-axis vector, repeated over axes.
DensityOperator product_pure_state(const PhaseSpaceRep& rep, const Vector& single_axis);

}  // namespace qskew
