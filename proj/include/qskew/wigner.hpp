// wigner.hpp: discrete Wigner transform and Weyl quantization in one dimension
//
// f_A(x, v) = ∫ exp(-i y v / hbar) A(x + y/2, x - y/2) dy, where the kernel
// A(x, x') = sum_{mn} A_mn phi_m(x) phi_n(x') is built from the Hermite
// functions of the harmonic representation. Both integrals are discretized
// with the uniform-grid trapezoidal rule. With h = 2 pi hbar the transform is
// an isometry: ||f_A||_{L2} = sqrt(h) ||A||_2.

#pragma once

#include "qskew/phase_space.hpp"

#include <iosfwd>
#include <string>

namespace qskew {

// Uniform grid with the right endpoint excluded: x_j = x_min + j*dx,
// dx = (x_max - x_min)/n_x (same for v).
struct GridSpec {
  double x_min = 0.0, x_max = 0.0;
  Index n_x = 0;
  double v_min = 0.0, v_max = 0.0;
  Index n_v = 0;

  static GridSpec symmetric(double half_width_x, Index n_x, double half_width_v, Index n_v);

  double dx() const { return (x_max - x_min) / static_cast<double>(n_x); }
  double dv() const { return (v_max - v_min) / static_cast<double>(n_v); }
  double x(Index j) const { return x_min + static_cast<double>(j) * dx(); }
  double v(Index k) const { return v_min + static_cast<double>(k) * dv(); }
  double cell_area() const { return dx() * dv(); }
};

class GridTooCoarseError : public Error {
 public:
  GridTooCoarseError(const std::string& what, double suggested_spacing);
  double suggested_spacing() const noexcept { return suggested_; }

 private:
  double suggested_;
};

// Phase-space samples, values(j, k) = f(x_j, v_k).
struct WignerField {
  GridSpec grid;
  double hbar = 1.0;
  Matrix values;

  double l2_norm() const;
  // Sum of f over the grid times the cell area.
  cplx integral() const;
};

// Hermite functions phi_0..phi_{n-1} at x for the given hbar (real, orthonormal).
RealVector hermite_functions(double x, int n, double hbar);

// A grid resolving every basis function of the representation.
GridSpec recommended_grid(const PhaseSpaceRep& rep);

// Nyquist condition dx <= pi hbar / max|v| for the oscillatory kernel.
void check_wigner_grid(const GridSpec& grid, double hbar);
// dv <= pi hbar / (x_max - x_min) and a position quadrature fine enough for the basis.
void check_weyl_grid(const GridSpec& grid, const PhaseSpaceRep& rep);

WignerField wigner_transform(const Matrix& a, const PhaseSpaceRep& rep, const GridSpec& grid);
Matrix weyl_quantize(const WignerField& field, const PhaseSpaceRep& rep);

// Spectral partial derivative of the field: axis 0 = d/dx, axis 1 = d/dv.
WignerField field_derivative(const WignerField& field, int axis);

// Relative discrete L2 distance ||a - b|| / ||b||.
double relative_l2_error(const WignerField& a, const WignerField& b);

void write_field_csv(std::ostream& os, const WignerField& field);
std::string field_metadata_json(const WignerField& field);

}  // namespace qskew
