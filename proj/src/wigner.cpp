#include "qskew/wigner.hpp"

#include "qskew/spectral.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace qskew {

namespace {

void require_one_dimensional(const PhaseSpaceRep& rep, const char* where) {
  if (rep.d() != 1) {
    throw Error(std::string(where) + ": phase-space grids are only supported for d = 1");
  }
}

// Hermite functions on a set of points, one row per point.
RealMatrix hermite_table(const RealVector& points, int n, double hbar) {
  RealMatrix t(points.size(), n);
  for (Index i = 0; i < points.size(); ++i) t.row(i) = hermite_functions(points(i), n, hbar).transpose();
  return t;
}

}  // namespace

GridSpec GridSpec::symmetric(double half_width_x, Index n_x, double half_width_v, Index n_v) {
  return GridSpec{-half_width_x, half_width_x, n_x, -half_width_v, half_width_v, n_v};
}

GridTooCoarseError::GridTooCoarseError(const std::string& what, double suggested_spacing)
    : Error(what + " (suggested spacing <= " + std::to_string(suggested_spacing) + ")"),
      suggested_(suggested_spacing) {}

double WignerField::l2_norm() const {
  return std::sqrt(values.squaredNorm() * grid.cell_area());
}

cplx WignerField::integral() const { return values.sum() * grid.cell_area(); }

RealVector hermite_functions(double x, int n, double hbar) {
  RealVector phi = RealVector::Zero(n);
  const double xi = x / std::sqrt(hbar);
  phi(0) = std::pow(kPi * hbar, -0.25) * std::exp(-0.5 * xi * xi);
  if (n > 1) phi(1) = std::sqrt(2.0) * xi * phi(0);
  for (int k = 1; k + 1 < n; ++k) {
    phi(k + 1) = std::sqrt(2.0 / (k + 1)) * xi * phi(k) - std::sqrt(static_cast<double>(k) / (k + 1)) * phi(k - 1);
  }
  return phi;
}

GridSpec recommended_grid(const PhaseSpaceRep& rep) {
  require_one_dimensional(rep, "recommended_grid");
  const double hb = rep.hbar();
  const double turning = std::sqrt(hb * (2.0 * rep.n_per_axis() + 1.0));
  const double half = turning + 6.0 * std::sqrt(hb);
  const double k_max = turning / hb;
  // Position quadrature (spacing 2 dx) must resolve products of basis functions.
  const double dx_basis = 0.5 * 2.0 * kPi / (2.0 * k_max + 12.0 / std::sqrt(hb));
  const double dx_nyquist = kPi * hb / half;
  const double dv_weyl = kPi * hb / (2.0 * half);
  const double step = std::min({dx_basis, dx_nyquist, dv_weyl});
  Index n = static_cast<Index>(std::ceil(2.0 * half / step));
  n += n % 2;
  return GridSpec::symmetric(half, n, half, n);
}

void check_wigner_grid(const GridSpec& grid, double hbar) {
  if (grid.n_x < 2 || grid.n_v < 2 || !(grid.x_max > grid.x_min) || !(grid.v_max > grid.v_min)) {
    throw Error("grid must have at least two points and positive extent per axis");
  }
  const double v_abs = std::max(std::abs(grid.v_min), std::abs(grid.v_max));
  const double limit = kPi * hbar / v_abs;
  if (grid.dx() > limit * (1.0 + 1e-12)) {
    throw GridTooCoarseError("Nyquist check failed: dx = " + std::to_string(grid.dx()) +
                                 " exceeds pi*hbar/v_max = " + std::to_string(limit),
                             limit);
  }
}

void check_weyl_grid(const GridSpec& grid, const PhaseSpaceRep& rep) {
  require_one_dimensional(rep, "check_weyl_grid");
  check_wigner_grid(grid, rep.hbar());
  const double dv_limit = kPi * rep.hbar() / (grid.x_max - grid.x_min);
  if (grid.dv() > dv_limit * (1.0 + 1e-12)) {
    throw GridTooCoarseError("v spacing " + std::to_string(grid.dv()) + " aliases kernel offsets up to " +
                                 std::to_string(grid.x_max - grid.x_min),
                             dv_limit);
  }
  const double k_max = std::sqrt((2.0 * rep.n_per_axis() + 1.0) / rep.hbar());
  const double dx_limit = 0.5 * kPi / k_max;
  if (grid.dx() > dx_limit * (1.0 + 1e-12)) {
    throw GridTooCoarseError("x spacing too coarse for a basis of size " + std::to_string(rep.n_per_axis()),
                             dx_limit);
  }
}

WignerField wigner_transform(const Matrix& a, const PhaseSpaceRep& rep, const GridSpec& grid) {
  require_one_dimensional(rep, "wigner_transform");
  if (a.rows() != rep.dim() || a.cols() != rep.dim()) throw DimensionError("wigner_transform: dimension mismatch");
  check_wigner_grid(grid, rep.hbar());

  const Index nx = grid.n_x;
  const Index ny = 2 * nx;
  const double dx = grid.dx();
  const double hb = rep.hbar();
  const int n = rep.n_per_axis();

  // Half-grid points x_min + m dx / 2 for m in [-nx, 3nx) cover every x_j ± y_l / 2.
  RealVector half_points(4 * nx);
  for (Index m = 0; m < 4 * nx; ++m) half_points(m) = grid.x_min + 0.5 * static_cast<double>(m - nx) * dx;
  const RealMatrix phi = hermite_table(half_points, n, hb);

  Matrix kernel(nx, ny);
  Matrix plus(ny, n), minus(ny, n);
  for (Index j = 0; j < nx; ++j) {
    for (Index l = 0; l < ny; ++l) {
      plus.row(l) = phi.row(2 * j + l - nx + nx).cast<cplx>();
      minus.row(l) = phi.row(2 * j - l + nx + nx).cast<cplx>();
    }
    kernel.row(j) = ((plus * a).cwiseProduct(minus)).rowwise().sum().transpose();
  }

  Matrix phase(ny, grid.n_v);
  for (Index l = 0; l < ny; ++l) {
    const double y = static_cast<double>(l - nx) * dx;
    for (Index k = 0; k < grid.n_v; ++k) phase(l, k) = std::exp(-kI * (y * grid.v(k) / hb));
  }

  WignerField field;
  field.grid = grid;
  field.hbar = hb;
  field.values = dx * (kernel * phase);
  return field;
}

Matrix weyl_quantize(const WignerField& field, const PhaseSpaceRep& rep) {
  require_one_dimensional(rep, "weyl_quantize");
  if (std::abs(field.hbar - rep.hbar()) > 1e-14 * rep.hbar()) {
    throw Error("weyl_quantize: field and representation use different hbar");
  }
  const GridSpec& grid = field.grid;
  check_weyl_grid(grid, rep);

  const Index nx = grid.n_x;
  const Index nq = (nx + 1) / 2;
  const double dx = grid.dx();
  const double delta = 2.0 * dx;
  const double hb = rep.hbar();

  // Position grid q_i = x_min + 2 i dx: midpoints (q_i + q_k)/2 = x_{i+k} fall on the field grid.
  RealVector q(nq);
  for (Index i = 0; i < nq; ++i) q(i) = grid.x_min + static_cast<double>(i) * delta;
  const Matrix phi = hermite_table(q, rep.n_per_axis(), hb).cast<cplx>();

  const Index nt = 2 * nq - 1;
  Matrix phase(grid.n_v, nt);
  for (Index k = 0; k < grid.n_v; ++k) {
    for (Index t = 0; t < nt; ++t) {
      const double y = static_cast<double>(t - (nq - 1)) * delta;
      phase(k, t) = std::exp(kI * (y * grid.v(k) / hb));
    }
  }
  const Matrix g = field.values * phase;

  const double scale = grid.dv() / planck_h(hb);
  Matrix kernel = Matrix::Zero(nq, nq);
  for (Index i = 0; i < nq; ++i) {
    for (Index k = 0; k < nq && i + k < nx; ++k) kernel(i, k) = scale * g(i + k, i - k + nq - 1);
  }
  return (delta * delta) * (phi.transpose() * kernel * phi);
}

WignerField field_derivative(const WignerField& field, int axis) {
  WignerField out = field;
  const double spacing = axis == 0 ? field.grid.dx() : field.grid.dv();
  out.values = spectral_derivative(field.values, spacing, axis, 1);
  return out;
}

double relative_l2_error(const WignerField& a, const WignerField& b) {
  if (a.values.rows() != b.values.rows() || a.values.cols() != b.values.cols()) {
    throw DimensionError("relative_l2_error: grid mismatch");
  }
  const double denom = b.values.norm();
  const double diff = (a.values - b.values).norm();
  return denom > 0.0 ? diff / denom : diff;
}

void write_field_csv(std::ostream& os, const WignerField& field) {
  os << "x,v,re,im\n";
  char buf[128];
  for (Index j = 0; j < field.grid.n_x; ++j) {
    for (Index k = 0; k < field.grid.n_v; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", field.grid.x(j), field.grid.v(k),
                    field.values(j, k).real(), field.values(j, k).imag());
      os << buf;
    }
  }
}

std::string field_metadata_json(const WignerField& field) {
  const GridSpec& g = field.grid;
  nlohmann::json j = {{"x_min", g.x_min}, {"x_max", g.x_max}, {"n_x", g.n_x}, {"dx", g.dx()},
                      {"v_min", g.v_min}, {"v_max", g.v_max}, {"n_v", g.n_v}, {"dv", g.dv()},
                      {"hbar", field.hbar}};
  return j.dump(2);
}

}  // namespace qskew
