#include "qskew/classical.hpp"

#include "qskew/constants.hpp"
#include "qskew/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qskew {

namespace {

double grid_lp(const RealMatrix& values, double p, double cell) {
  if (!(p >= 1.0)) throw Error("grid L^p norm: p must be >= 1");
  if (std::isinf(p)) return values.cwiseAbs().maxCoeff();
  return std::pow(values.cwiseAbs().array().pow(p).sum() * cell, 1.0 / p);
}

RealMatrix sample_fn(const std::function<double(double, double)>& fn, const GridSpec& g) {
  RealMatrix m(g.n_x, g.n_v);
  for (Index j = 0; j < g.n_x; ++j) {
    for (Index k = 0; k < g.n_v; ++k) m(j, k) = fn(g.x(j), g.v(k));
  }
  return m;
}

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (a.n_x != b.n_x || a.n_v != b.n_v || a.x_min != b.x_min || a.x_max != b.x_max || a.v_min != b.v_min ||
      a.v_max != b.v_max) {
    throw DimensionError("fields live on different grids");
  }
}

double c_11() { return sobolev_constant_11_2d(); }

}  // namespace

double GridField2D::integral() const { return values.sum() * grid.cell_area(); }

double GridField2D::lp_norm(double p) const { return grid_lp(values, p, grid.cell_area()); }

GridField2D AnalyticField::sample(const GridSpec& grid) const { return {grid, sample_fn(value, grid)}; }

DifferentiatedField DifferentiatedField::from_analytic(const AnalyticField& f, const GridSpec& grid) {
  return {grid, sample_fn(f.value, grid), sample_fn(f.d_x, grid), sample_fn(f.d_v, grid)};
}

DifferentiatedField DifferentiatedField::from_samples(const GridField2D& f, double decay_tol) {
  require_boundary_decay(f, decay_tol);
  return {f.grid, f.values, spectral_derivative(f.values, f.grid.dx(), 0),
          spectral_derivative(f.values, f.grid.dv(), 1)};
}

double boundary_ratio(const GridField2D& f) {
  const RealMatrix a = f.values.cwiseAbs();
  const double peak = a.maxCoeff();
  if (peak == 0.0) return 0.0;
  const Index r = a.rows() - 1, c = a.cols() - 1;
  const double edge = std::max({a.row(0).maxCoeff(), a.row(r).maxCoeff(), a.col(0).maxCoeff(), a.col(c).maxCoeff()});
  return edge / peak;
}

void require_boundary_decay(const GridField2D& f, double tol) {
  const double b = boundary_ratio(f);
  if (b > tol) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "field does not decay at the grid boundary (relative magnitude %.3e > %.1e); enlarge the grid", b, tol);
    throw Error(buf);
  }
}

GridField2D poisson_bracket(const DifferentiatedField& g, const DifferentiatedField& f) {
  require_same_grid(g.grid, f.grid);
  return {g.grid, g.dx.cwiseProduct(f.dv) - g.dv.cwiseProduct(f.dx)};
}

GridField2D poisson_bracket(const GridField2D& g, const GridField2D& f) {
  return poisson_bracket(DifferentiatedField::from_samples(g), DifferentiatedField::from_samples(f));
}

double sobolev_norm(const GridField2D& g, double s, double alias_tol) {
  if (!(s >= 0.0)) throw Error("sobolev_norm: s must be non-negative");
  require_boundary_decay(g);
  const Matrix spec = fft2(g.values.cast<cplx>());
  const Index nx = g.grid.n_x, nv = g.grid.n_v;
  double total = 0.0, outer = 0.0, acc = 0.0;
  for (Index j = 0; j < nx; ++j) {
    const double wx = angular_wavenumber(j, nx, g.grid.dx());
    const Index sj = 2 * j <= nx ? j : nx - j;
    for (Index k = 0; k < nv; ++k) {
      const double wv = angular_wavenumber(k, nv, g.grid.dv());
      const Index sk = 2 * k <= nv ? k : nv - k;
      const double m = std::norm(spec(j, k));
      total += m;
      if (10 * sj > 4 * nx || 10 * sk > 4 * nv) outer += m;
      const double w2 = wx * wx + wv * wv;
      acc += (s == 0.0 ? 1.0 : std::pow(w2, s)) * m;
    }
  }
  if (total > 0.0 && outer / total > alias_tol) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "sobolev_norm: spectrum not resolved (outer-band mass fraction %.3e); refine the grid",
                  outer / total);
    throw Error(buf);
  }
  return std::sqrt(acc * g.grid.cell_area() / static_cast<double>(nx * nv));
}

AnalyticField gaussian_density(double sx, double sv) {
  if (!(sx > 0.0 && sv > 0.0)) throw Error("gaussian_density: widths must be positive");
  const double norm = 1.0 / (2.0 * kPi * sx * sv);
  auto f = [=](double x, double v) { return norm * std::exp(-0.5 * (x * x / (sx * sx) + v * v / (sv * sv))); };
  return {f, [=](double x, double v) { return -x / (sx * sx) * f(x, v); },
          [=](double x, double v) { return -v / (sv * sv) * f(x, v); }};
}

DifferentiatedField sqrt_density(const GridField2D& f) {
  if (f.values.minCoeff() < 0.0) throw Error("sqrt_density: density has negative samples");
  return DifferentiatedField::from_samples({f.grid, f.values.cwiseSqrt()});
}

RatioReport check_classical_sobolev_scaling(const GridField2D& f, double p, double slack_tol) {
  if (!(p > 1.0) || std::isinf(p)) throw Error("check_classical_sobolev_scaling: p must lie in (1, inf)");
  const double s = 1.0 - 1.0 / p;
  const double cs = one_d_constant(s).value;
  const DifferentiatedField root = sqrt_density(f);
  const double cell = f.grid.cell_area();
  const double a = grid_lp(root.dx, 2.0, cell);
  const double b = grid_lp(root.dv, 2.0, cell);
  const double lhs = f.lp_norm(p) / (cs * cs);
  const double rhs = std::pow(2.0, s) * std::pow(a * b, s) * std::pow(f.lp_norm(1.0), 1.0 / p);
  return make_ratio_report("classical_sobolev_scaling", lhs, rhs, Relation::le, slack_tol, digest_values({p}));
}

double gaussian_sobolev_scaling_ratio(double p) {
  const double s = 1.0 - 1.0 / p;
  const double cs = one_d_constant(s).value;
  return cs * cs * std::pow(kPi, s) * std::pow(p, 1.0 / p);
}

double gaussian_sobolev_ratio(int d) {
  const double c = sobolev_constant_12(d);
  const double q = static_cast<double>(d) / (d - 1);
  return kPi * d * c * c * std::pow(q, d - 1);
}

double DiffeoPair::jacobian(double x, double v) const {
  return alpha.d_x(x, v) * beta.d_v(x, v) - alpha.d_v(x, v) * beta.d_x(x, v);
}

DiffeoPair DiffeoPair::rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  DiffeoPair d;
  d.name = "rotation";
  d.alpha = {[=](double x, double v) { return c * x - s * v; }, [=](double, double) { return c; },
             [=](double, double) { return -s; }};
  d.beta = {[=](double x, double v) { return s * x + c * v; }, [=](double, double) { return s; },
            [=](double, double) { return c; }};
  d.inverse = [=](double a, double b) { return std::pair{c * a + s * b, -s * a + c * b}; };
  return d;
}

DiffeoPair DiffeoPair::shear(double k) {
  DiffeoPair d;
  d.name = "shear";
  d.alpha = {[](double x, double) { return x; }, [](double, double) { return 1.0; },
             [](double, double) { return 0.0; }};
  d.beta = {[=](double x, double v) { return v + k * x; }, [=](double, double) { return k; },
            [](double, double) { return 1.0; }};
  d.inverse = [=](double a, double b) { return std::pair{a, b - k * a}; };
  return d;
}

DiffeoPair DiffeoPair::stretch(double k) {
  if (!(k >= 0.0)) throw Error("DiffeoPair::stretch: parameter must be non-negative");
  DiffeoPair d;
  d.name = "stretch";
  d.alpha = {[=](double x, double) { return x + k * x * x * x / 3.0; },
             [=](double x, double) { return 1.0 + k * x * x; }, [](double, double) { return 0.0; }};
  d.beta = {[](double, double v) { return v; }, [](double, double) { return 0.0; },
            [](double, double) { return 1.0; }};
  d.inverse = [=](double a, double b) {
    // x + k x^3 / 3 - a is convex for x > 0 (concave for x < 0) and has the
    // same sign as a at x = a, so Newton from x = a converges monotonically.
    double x = a;
    for (int it = 0; it < 100; ++it) {
      const double fx = x + k * x * x * x / 3.0 - a;
      const double step = fx / (1.0 + k * x * x);
      x -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
    }
    return std::pair{x, b};
  };
  return d;
}

DiffeoPair DiffeoPair::by_name(const std::string& name, double param) {
  if (name == "rotation") return rotation(param);
  if (name == "shear") return shear(param);
  if (name == "stretch") return stretch(param);
  throw Error("unknown diffeomorphism family '" + name + "' (expected rotation, shear or stretch)");
}

std::string to_string(UncertaintyConvention c) {
  return c == UncertaintyConvention::as_stated ? "as_stated" : "chain_rule_corrected";
}

RatioReport check_classical_uncertainty_1d(const GridField2D& f, const DiffeoPair& pair,
                                           UncertaintyConvention convention, double slack_tol) {
  const DifferentiatedField a = DifferentiatedField::from_analytic(pair.alpha, f.grid);
  const DifferentiatedField b = DifferentiatedField::from_analytic(pair.beta, f.grid);
  const RealMatrix jac = a.dx.cwiseProduct(b.dv) - a.dv.cwiseProduct(b.dx);
  const double peak = f.values.maxCoeff();
  for (Index j = 0; j < jac.rows(); ++j) {
    for (Index k = 0; k < jac.cols(); ++k) {
      if (f.values(j, k) > 1e-12 * peak && std::abs(jac(j, k)) <= 1e-12) {
        throw Error("check_classical_uncertainty_1d: {alpha, beta} vanishes on the support of f");
      }
    }
  }
  const DifferentiatedField root = sqrt_density(f);
  const double cell = f.grid.cell_area();
  const double c = c_11();
  const double k = convention == UncertaintyConvention::as_stated ? 1.0 / (2.0 * c * c) : 1.0 / (8.0 * c * c);
  const double lhs = k * jac.cwiseAbs().cwiseProduct(f.values.cwiseProduct(f.values)).sum() * cell;
  const double rhs =
      grid_lp(poisson_bracket(a, root).values, 2.0, cell) * grid_lp(poisson_bracket(b, root).values, 2.0, cell);
  return make_ratio_report("classical_uncertainty_" + to_string(convention) + "_" + pair.name, lhs, rhs,
                           Relation::le, slack_tol);
}

BracketHolderReport check_bracket_holder(const DifferentiatedField& a, const DifferentiatedField& b, double p,
                                         double q, double r, double slack_tol) {
  if (!(p >= 1.0 && q >= 1.0 && r >= 1.0)) throw Error("check_bracket_holder: exponents must be >= 1");
  if (std::abs(1.0 / p - (1.0 / q + 1.0 / r)) > 1e-12) {
    throw Error("check_bracket_holder: exponents must satisfy 1/p = 1/q + 1/r");
  }
  require_same_grid(a.grid, b.grid);
  const double cell = a.grid.cell_area();
  const double bracket = grid_lp(a.dx.cwiseProduct(b.dv) - a.dv.cwiseProduct(b.dx), p, cell);
  const double ax = grid_lp(a.dx, q, cell), av = grid_lp(a.dv, q, cell);
  const double bx = grid_lp(b.dx, r, cell), bv = grid_lp(b.dv, r, cell);
  const RealMatrix ga = (a.dx.array().square() + a.dv.array().square()).sqrt().matrix();
  const RealMatrix gb = (b.dx.array().square() + b.dv.array().square()).sqrt().matrix();
  const std::string digest = digest_values({p, q, r});
  BracketHolderReport rep;
  rep.holder = make_ratio_report("bracket_holder", bracket, ax * bv + av * bx, Relation::le, slack_tol, digest);
  rep.gradient_form = make_ratio_report("bracket_holder_gradient", bracket, grid_lp(ga, q, cell) * grid_lp(gb, r, cell),
                                        Relation::le, slack_tol, digest);
  rep.product_form = make_ratio_report("bracket_holder_product", bracket * bracket, 2.0 * ax * av * bv * bx,
                                       Relation::le, slack_tol, digest);
  return rep;
}

double ChangeOfVariables::relative_error() const {
  return std::abs(direct - transformed) / std::max(std::abs(direct), std::abs(transformed));
}

ChangeOfVariables change_of_variables(const AnalyticField& f, const DiffeoPair& pair, double q, const GridSpec& grid) {
  if (!(q >= 1.0) || std::isinf(q)) throw Error("change_of_variables: q must be finite and >= 1");
  double direct = 0.0, transformed = 0.0;
  for (Index j = 0; j < grid.n_x; ++j) {
    for (Index k = 0; k < grid.n_v; ++k) {
      const double x = grid.x(j), v = grid.v(k);
      const auto [ix, iv] = pair.inverse(x, v);
      direct += std::pow(std::abs(f.value(ix, iv)), q);
      transformed += std::abs(pair.jacobian(x, v)) * std::pow(std::abs(f.value(x, v)), q);
    }
  }
  const double cell = grid.cell_area();
  return {std::pow(direct * cell, 1.0 / q), std::pow(transformed * cell, 1.0 / q)};
}

}  // namespace qskew
