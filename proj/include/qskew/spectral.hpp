// spectral.hpp: FFT-based differentiation on uniform periodic grids

#pragma once

#include "qskew/types.hpp"

namespace qskew {

// Angular wavenumber of FFT bin k for n samples with the given spacing.
// The Nyquist bin (k == n/2 for even n) is reported as +pi/spacing.
double angular_wavenumber(Index k, Index n, double spacing);

// d/dz along `axis` (0 = rows index, i.e. the first grid coordinate; 1 = columns)
// of samples on a periodic grid. The Nyquist bin is dropped for odd orders.
Matrix spectral_derivative(const Matrix& f, double spacing, int axis, int order = 1);
RealMatrix spectral_derivative(const RealMatrix& f, double spacing, int axis, int order = 1);

// Unnormalized 2-D DFT, F(k, l) = sum_{j,m} f(j, m) exp(-2 pi i (jk/n0 + ml/n1)).
Matrix fft2(const Matrix& f);

}  // namespace qskew
