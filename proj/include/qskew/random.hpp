// random.hpp: pinned pseudo-random generator used for every stochastic ensemble
//
// Reports must be reproducible across languages, so the generator is spelled
// out rather than left to std::normal_distribution (whose algorithm is
// implementation-defined):
//
//   * engine: std::mt19937_64 seeded with the 64-bit seed (fully specified by the standard);
//   * uniform: u = (next() >> 11) * 2^-53, in [0, 1);
//   * normal: Box-Muller on a pair (u1, u2): r = sqrt(-2 ln(1 - u1)),
//     z0 = r cos(2 pi u2), z1 = r sin(2 pi u2); z0 is returned first, z1 next;
//   * standard complex normal: (z_re + i z_im) / sqrt(2), real part drawn first;
//   * substreams: seed' = splitmix64(seed ^ splitmix64(index)).
//
// Matrices are filled row-major.

#pragma once

#include "qskew/types.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace qskew {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

class PinnedRng {
 public:
  explicit PinnedRng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double normal();
  cplx complex_normal();

  // dim x cols matrix of standard complex normals, row-major fill.
  Matrix ginibre(Index rows, Index cols);
  // Hermitian (G + G*)/2 with G Ginibre.
  Matrix hermitian(Index dim);
  // Haar unitary: QR of a Ginibre matrix with the R-diagonal phases removed.
  Matrix unitary(Index dim);
  // Unit vector, uniformly distributed on the complex sphere.
  Vector unit_vector(Index dim);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace qskew
