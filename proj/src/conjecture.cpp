#include "qskew/conjecture.hpp"

#include "qskew/inequalities.hpp"
#include "qskew/matrix_io.hpp"
#include "qskew/parallel.hpp"
#include "qskew/random.hpp"
#include "qskew/states.hpp"

#include "json.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

namespace qskew {

ScalingOptimum optimize_scaling(double a, double b, double exponent) {
  if (!(a > 0.0 && b > 0.0 && exponent > 0.0)) throw Error("optimize_scaling: a, b and exponent must be positive");
  return {std::pow(b / a, 1.0 / (2.0 * exponent)), 2.0 * std::sqrt(a * b)};
}

SkewObjective skew_violation_objective(const DensityOperator& rho, const HermitianOperator& a,
                                       const HermitianOperator& b, SkewMethod method) {
  SkewObjective o;
  o.skew_a = skew_information(rho, a, method);
  o.skew_b = skew_information(rho, b, method);
  o.half_commutator = 0.5 * std::abs((commutator(a.matrix(), b.matrix()) * rho.matrix()).trace());
  const double num = std::sqrt(std::max(o.skew_a * o.skew_b, 0.0));
  o.ratio = o.half_commutator > 0.0 ? num / o.half_commutator : std::numeric_limits<double>::infinity();
  return o;
}

namespace {

// ---- skew-violation search -------------------------------------------------

constexpr double kPenalty = 1e3;
// Commutator expectations below this fraction of ||A||_F ||B||_F count as degenerate.
// Near the maximally mixed state the ratio shrinks with the perturbation, and this
// keeps witnesses well above the roundoff floor.
constexpr double kDenominatorGuard = 1e-4;

struct Triple {
  DensityOperator rho;
  HermitianOperator a, b;
};

Matrix decode_hermitian(const double* p, Index n) {
  Matrix h(n, n);
  for (Index i = 0; i < n; ++i) h(i, i) = p[i];
  const double* off = p + n;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      h(i, j) = cplx(off[0], off[1]);
      h(j, i) = std::conj(h(i, j));
      off += 2;
    }
  }
  return h;
}

Index parameter_count(Index n) { return 4 * n * n; }

Triple decode(const double* p, Index n) {
  Matrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) g(i, j) = cplx(p[2 * (i * n + j)], p[2 * (i * n + j) + 1]);
  }
  const double* rest = p + 2 * n * n;
  return {DensityOperator::normalized(g * g.adjoint()), HermitianOperator(decode_hermitian(rest, n)),
          HermitianOperator(decode_hermitian(rest + n * n, n))};
}

// Objective with the denominator guard; nullopt for infeasible or degenerate points.
std::optional<double> guarded_objective(const Triple& t) {
  const double scale = t.a.matrix().norm() * t.b.matrix().norm();
  const SkewObjective o = skew_violation_objective(t.rho, t.a, t.b);
  if (!(o.half_commutator > kDenominatorGuard * scale) || !std::isfinite(o.ratio)) return std::nullopt;
  return o.ratio;
}

struct RestartState {
  Index dim = 0;
  long long share = 0;
  long long used = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_params;
};

double evaluate_point(const double* p, RestartState& st, bool charged) {
  if (charged) {
    if (st.used >= st.share) return kPenalty;
    ++st.used;
  }
  std::optional<double> v;
  try {
    v = guarded_objective(decode(p, st.dim));
  } catch (const Error&) {
    v = std::nullopt;
  }
  if (!v) return kPenalty;
  if (*v < st.best) {
    st.best = *v;
    st.best_params.assign(p, p + parameter_count(st.dim));
  }
  return *v;
}

double gsl_objective(const gsl_vector* x, void* params) {
  auto* st = static_cast<RestartState*>(params);
  return evaluate_point(x->data, *st, true);
}

struct GslVectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct GslMinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

RestartState run_restart(Index dim, long long share, std::uint64_t seed) {
  RestartState st;
  st.dim = dim;
  st.share = share;
  const auto np = static_cast<std::size_t>(parameter_count(dim));
  PinnedRng rng(seed);
  std::vector<double> x0(np);
  for (auto& v : x0) v = rng.normal();
  evaluate_point(x0.data(), st, false);
  if (st.best_params.empty()) st.best_params = x0;

  std::unique_ptr<gsl_vector, GslVectorDeleter> x(gsl_vector_alloc(np));
  std::unique_ptr<gsl_vector, GslVectorDeleter> step(gsl_vector_alloc(np));
  std::unique_ptr<gsl_multimin_fminimizer, GslMinimizerDeleter> nm(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, np));
  gsl_multimin_function fn{&gsl_objective, np, &st};
  double step_size = 0.5;
  while (st.used < st.share) {
    // (Re)start the simplex around the incumbent.
    std::copy(st.best_params.begin(), st.best_params.end(), x->data);
    gsl_vector_set_all(step.get(), step_size);
    if (gsl_multimin_fminimizer_set(nm.get(), &fn, x.get(), step.get()) != GSL_SUCCESS) break;
    const double before = st.best;
    while (st.used < st.share) {
      if (gsl_multimin_fminimizer_iterate(nm.get()) != GSL_SUCCESS) break;
      if (gsl_multimin_fminimizer_size(nm.get()) < 1e-10) break;
    }
    step_size = st.best < before ? 0.5 : 0.5 * step_size;
    if (step_size < 1e-6) step_size = 0.5;
  }
  return st;
}

}  // namespace

SearchResult search_skew_violation(Index dim, long long budget, std::uint64_t seed, int restarts, int workers) {
  if (dim < 2) throw Error("search_skew_violation: dim must be >= 2");
  if (budget < 0) throw Error("search_skew_violation: budget must be non-negative");
  if (restarts < 1) throw Error("search_skew_violation: need at least one restart");
  gsl_set_error_handler_off();
  const auto r = static_cast<std::size_t>(restarts);
  std::vector<RestartState> runs(r);
  parallel_for(r, workers, [&](std::size_t i) {
    const long long share = budget / restarts + (static_cast<long long>(i) < budget % restarts ? 1 : 0);
    runs[i] = run_restart(dim, share, substream_seed(seed, i));
  });

  SearchResult res;
  res.dim = dim;
  res.seed = seed;
  res.budget = budget;
  res.restarts = restarts;
  res.best_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r; ++i) {
    res.iterations += runs[i].used;
    if (runs[i].best < res.best_ratio) {
      res.best_ratio = runs[i].best;
      res.best_restart = static_cast<int>(i);
    }
  }
  if (res.best_restart < 0) throw Error("search_skew_violation: no feasible point was evaluated");
  const Triple t = decode(runs[static_cast<std::size_t>(res.best_restart)].best_params.data(), dim);
  res.witness_state = t.rho;
  res.witness_a = t.a;
  res.witness_b = t.b;
  res.converged = budget > 0 && res.best_ratio < 1.0 - kViolationMargin;
  return res;
}

double reverify_witness(const SearchResult& r) {
  return skew_violation_objective(r.witness_state, r.witness_a, r.witness_b, SkewMethod::spectral).ratio;
}

std::string SearchResult::to_json() const {
  const SkewObjective o = skew_violation_objective(witness_state, witness_a, witness_b);
  const nlohmann::json j = {{"objective", "skew_violation"},
                            {"dim", dim},
                            {"best_ratio", best_ratio},
                            {"skew_a", o.skew_a},
                            {"skew_b", o.skew_b},
                            {"half_commutator", o.half_commutator},
                            {"iterations", iterations},
                            {"budget", budget},
                            {"seed", seed},
                            {"restarts", restarts},
                            {"best_restart", best_restart},
                            {"converged", converged}};
  return j.dump(2);
}

void save_witness(const SearchResult& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  save_matrix(base / "rho.txt", r.witness_state.matrix(), MatrixKind::density);
  save_matrix(base / "a.txt", r.witness_a.matrix(), MatrixKind::hermitian);
  save_matrix(base / "b.txt", r.witness_b.matrix(), MatrixKind::hermitian);
  std::ofstream(base / "result.json") << r.to_json() << '\n';
}

SearchResult load_witness(const std::string& dir) {
  const std::filesystem::path base(dir);
  std::ifstream in(base / "result.json");
  if (!in) throw Error("load_witness: cannot open " + (base / "result.json").string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("load_witness: malformed result.json: ") + e.what());
  }
  SearchResult r;
  r.dim = j.at("dim").get<Index>();
  r.best_ratio = j.at("best_ratio").get<double>();
  r.iterations = j.at("iterations").get<long long>();
  r.budget = j.at("budget").get<long long>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.restarts = j.at("restarts").get<int>();
  r.best_restart = j.at("best_restart").get<int>();
  r.converged = j.at("converged").get<bool>();
  r.witness_state = DensityOperator(HermitianOperator(load_matrix(base / "rho.txt").matrix));
  r.witness_a = HermitianOperator(load_matrix(base / "a.txt").matrix);
  r.witness_b = HermitianOperator(load_matrix(base / "b.txt").matrix);
  if (r.witness_state.dim() != r.dim || r.witness_a.dim() != r.dim || r.witness_b.dim() != r.dim) {
    throw DimensionError("load_witness: matrix dimensions disagree with result.json");
  }
  return r;
}

// ---- conjectured operator uncertainty -------------------------------------

Conjecture31Value conjecture_31_ratio(const DensityOperator& rho, const HermitianOperator& a,
                                      const HermitianOperator& b) {
  require_same_dim(rho.matrix(), a.matrix(), "conjecture_31_ratio");
  require_same_dim(a.matrix(), b.matrix(), "conjecture_31_ratio");
  const Matrix c = commutator(a.matrix(), b.matrix());
  // [A,B] is anti-Hermitian, so |[A,B]| = sqrt(-[A,B]^2) is Hermitian PSD.
  const Matrix sq = c.adjoint() * c;
  const SpectralDecomposition abs_sq = spectral_decompose(HermitianOperator(0.5 * (sq + sq.adjoint())));
  const Matrix abs_c = apply_function(abs_sq, [](double l) { return cplx(std::sqrt(std::max(l, 0.0)), 0.0); });
  const Matrix half = apply_function(abs_sq, [](double l) { return cplx(std::pow(std::max(l, 0.0), 0.25), 0.0); });
  const Matrix root = matrix_sqrt_psd(rho).matrix();
  Conjecture31Value v;
  v.lhs = (half * rho.matrix()).squaredNorm();
  v.lhs_trace = (abs_c * rho.matrix() * rho.matrix()).trace().real();
  v.rhs = commutator(a.matrix(), root).norm() * commutator(b.matrix(), root).norm();
  if (v.rhs <= kZeroFloor) {
    v.skipped = true;
    return v;
  }
  v.ratio = v.lhs / v.rhs;
  return v;
}

namespace {

const std::vector<std::string> kPairs{"xp", "rotation", "shear", "stretch"};
const std::vector<std::string> kNamedStates{"ground", "thermal", "squeezed", "coherent"};

// P f(x) P for a polynomial in x, computed in a basis padded by `pad` levels.
Matrix padded_position_power(const PhaseSpaceRep& rep, int power) {
  const int n = rep.n_per_axis();
  const Matrix a = lowering_operator(n + power);
  const Matrix x = std::sqrt(rep.hbar() / 2.0) * (a + a.adjoint());
  Matrix out = Matrix::Identity(n + power, n + power);
  for (int k = 0; k < power; ++k) out = (out * x).eval();
  return out.topLeftCorner(n, n);
}

std::pair<HermitianOperator, HermitianOperator> pair_operators(const PhaseSpaceRep& rep, const std::string& name) {
  const Matrix& x = rep.x(0).matrix();
  const Matrix& p = rep.p(0).matrix();
  if (name == "xp") return {rep.x(0), rep.p(0)};
  if (name == "rotation") {
    const double c = std::cos(kPi / 4.0), s = std::sin(kPi / 4.0);
    return {HermitianOperator(c * x - s * p), HermitianOperator(s * x + c * p)};
  }
  if (name == "shear") return {rep.x(0), HermitianOperator(p + 0.5 * x)};
  if (name == "stretch") return {HermitianOperator(x + 0.1 * padded_position_power(rep, 3)), rep.p(0)};
  throw Error("unknown operator pair '" + name + "'");
}

DensityOperator ensemble_state(const PhaseSpaceRep& rep, std::size_t which, std::uint64_t seed) {
  switch (which) {
    case 0: return ground_state(rep);
    case 1: return thermal_state(rep, 1.0);
    case 2: return squeezed_vacuum(rep, 0.5);
    case 3: return coherent_state(rep, cplx(1.0, 0.5));
    default: break;
  }
  const auto k = which - kNamedStates.size();
  return embedded_random_density(rep, std::max(2, rep.n_per_axis() / 4), 3, substream_seed(seed, k));
}

std::string hbar_group(double hbar) {
  std::ostringstream os;
  os << "hbar=" << hbar;
  return os.str();
}

std::string cell_group(const HolderCell& c) {
  std::ostringstream os;
  os << "hbar=" << c.hbar << ";N=" << c.n;
  return os.str();
}

template <typename Sample>
EmpiricalConstant run_ensemble(std::string name, std::string spec, std::size_t count, int workers, Sample sample,
                               const std::function<std::string(std::size_t)>& group) {
  std::vector<std::optional<double>> ratios(count);
  parallel_for(count, workers, [&](std::size_t i) { ratios[i] = sample(i); });
  std::vector<RatioSample> samples;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!ratios[i]) {
      ++skipped;
      continue;
    }
    samples.push_back({*ratios[i], group(i), "index=" + std::to_string(i)});
  }
  return EmpiricalConstant::from_samples(std::move(name), std::move(spec), std::move(samples), skipped);
}

std::size_t states_per_pair(const Conjecture31Config& cfg) {
  return kNamedStates.size() + static_cast<std::size_t>(std::max(0, cfg.random_states));
}

void require_cells(const std::vector<HolderCell>& cells, int samples) {
  if (cells.empty()) throw Error("ensemble needs at least one (hbar, N) cell");
  if (samples < 1) throw Error("ensemble needs at least one sample per cell");
}

}  // namespace

std::size_t conjecture_31_sample_count(const Conjecture31Config& cfg) {
  return cfg.hbars.size() * kPairs.size() * states_per_pair(cfg);
}

std::optional<double> conjecture_31_sample(const Conjecture31Config& cfg, std::size_t index) {
  const std::size_t per_pair = states_per_pair(cfg);
  const std::size_t per_hbar = kPairs.size() * per_pair;
  if (index >= conjecture_31_sample_count(cfg)) throw Error("conjecture_31_sample: index out of range");
  const PhaseSpaceRep rep = build_harmonic_rep(1, cfg.n, cfg.hbars[index / per_hbar]);
  const auto [a, b] = pair_operators(rep, kPairs[(index % per_hbar) / per_pair]);
  const Conjecture31Value v = conjecture_31_ratio(ensemble_state(rep, index % per_pair, cfg.seed), a, b);
  if (v.skipped) return std::nullopt;
  return v.ratio;
}

EmpiricalConstant estimate_conjecture_31(const Conjecture31Config& cfg) {
  if (cfg.hbars.empty()) throw Error("estimate_conjecture_31: no hbar values");
  const std::size_t per_hbar = kPairs.size() * states_per_pair(cfg);
  std::ostringstream spec;
  spec << "pairs=xp|rotation|shear|stretch;states=ground|thermal|squeezed|coherent|random x" << cfg.random_states
       << ";N=" << cfg.n << ";seed=" << cfg.seed;
  return run_ensemble(
      "conjecture_31", spec.str(), conjecture_31_sample_count(cfg), cfg.workers,
      [&](std::size_t i) { return conjecture_31_sample(cfg, i); },
      [&](std::size_t i) { return hbar_group(cfg.hbars[i / per_hbar]); });
}

// ---- quantum Hölder ---------------------------------------------------------

double quantum_holder_ratio(const Matrix& a, const Matrix& b, const PhaseSpaceRep& rep, double p, double q,
                            double r) {
  if (!(p > 1.0 && q > 1.0 && r > 1.0) || std::isinf(p) || std::isinf(q) || std::isinf(r)) {
    throw Error("quantum_holder_ratio: exponents must lie in (1, inf)");
  }
  if (std::abs(1.0 / p - 1.0 / q - 1.0 / r) > 1e-12) throw Error("quantum_holder_ratio: need 1/p = 1/q + 1/r");
  const double hb = rep.hbar(), h = rep.h();
  const double d = rep.d();
  const double num = std::pow(h, d / p) * schatten_norm(commutator(a, b), p);
  const double ga = std::pow(h, d / q) * quantum_gradient(a, rep).norm(q);
  const double gb = std::pow(h, d / r) * quantum_gradient(b, rep).norm(r);
  const double den = hb * ga * gb;
  if (den <= kZeroFloor) return num <= kZeroFloor ? 0.0 : std::numeric_limits<double>::infinity();
  return num / den;
}

std::optional<double> quantum_holder_sample(const HolderConfig& cfg, std::size_t index) {
  require_cells(cfg.cells, cfg.samples);
  const auto per_cell = static_cast<std::size_t>(cfg.samples);
  if (index >= per_cell * cfg.cells.size()) throw Error("quantum_holder_sample: index out of range");
  const HolderCell& cell = cfg.cells[index / per_cell];
  PinnedRng rng(substream_seed(cfg.seed, index % per_cell));
  const GaussianTrigSymbol sa = cfg.ensemble.sample(rng);
  const GaussianTrigSymbol sb = cfg.ensemble.sample(rng);
  const PhaseSpaceRep rep = build_harmonic_rep(1, cell.n, cell.hbar);
  const double ratio = quantum_holder_ratio(sa.weyl_quantize(rep), sb.weyl_quantize(rep), rep, cfg.p, cfg.q, cfg.r);
  if (!std::isfinite(ratio)) return std::nullopt;
  return ratio;
}

EmpiricalConstant estimate_quantum_holder(const HolderConfig& cfg) {
  require_cells(cfg.cells, cfg.samples);
  std::ostringstream spec;
  spec << cfg.ensemble.describe() << ";p=" << cfg.p << ";q=" << cfg.q << ";r=" << cfg.r << ";samples=" << cfg.samples
       << ";seed=" << cfg.seed;
  const auto per_cell = static_cast<std::size_t>(cfg.samples);
  return run_ensemble(
      "quantum_holder", spec.str(), per_cell * cfg.cells.size(), cfg.workers,
      [&](std::size_t i) { return quantum_holder_sample(cfg, i); },
      [&](std::size_t i) { return cell_group(cfg.cells[i / per_cell]); });
}

// ---- weak Hölder --------------------------------------------------------------

WeakHolderValue check_weak_holder(const Matrix& a, const Matrix& b, const PhaseSpaceRep& rep, int n, double p) {
  const int d = rep.d();
  if (n <= d) throw Error("check_weak_holder: need n > d");
  if (n + 1 > kMaxGradientOrder) throw Error("check_weak_holder: gradient order n + 1 exceeds the cap");
  if (!(p >= 1.0)) throw Error("check_weak_holder: p must be >= 1");
  const double h = rep.h();
  const double e = static_cast<double>(d) / n;
  const double l2 = std::pow(h, d / 2.0);
  const double lp = std::isinf(p) ? 1.0 : std::pow(h, d / p);
  WeakHolderValue v;
  v.numerator = lp * schatten_norm(commutator(a, b), p);
  const double high = l2 * iterated_gradient_norm(a, rep, n + 1, 2.0);
  const double low = l2 * iterated_gradient_norm(a, rep, 1, 2.0);
  const double gb = lp * iterated_gradient_norm(b, rep, 1, p);
  v.denominator = std::pow(high, e) * std::pow(low, 1.0 - e) * gb;
  if (v.denominator <= kZeroFloor) {
    v.degenerate = true;
    v.ratio = v.numerator <= kZeroFloor ? 0.0 : std::numeric_limits<double>::infinity();
    return v;
  }
  v.ratio = v.numerator / v.denominator;
  return v;
}

std::optional<double> weak_holder_sample(const WeakHolderConfig& cfg, std::size_t index) {
  require_cells(cfg.cells, cfg.samples);
  const auto per_cell = static_cast<std::size_t>(cfg.samples);
  if (index >= per_cell * cfg.cells.size()) throw Error("weak_holder_sample: index out of range");
  const HolderCell& cell = cfg.cells[index / per_cell];
  PinnedRng rng(substream_seed(cfg.seed, index % per_cell));
  const GaussianTrigSymbol sa = cfg.ensemble.sample(rng);
  const GaussianTrigSymbol sb = cfg.ensemble.sample(rng);
  const PhaseSpaceRep rep = build_harmonic_rep(1, cell.n, cell.hbar);
  const WeakHolderValue v = check_weak_holder(sa.weyl_quantize(rep), sb.weyl_quantize(rep), rep, cfg.n, cfg.p);
  if (v.degenerate) return std::nullopt;
  return v.ratio;
}

EmpiricalConstant estimate_weak_holder(const WeakHolderConfig& cfg) {
  require_cells(cfg.cells, cfg.samples);
  std::ostringstream spec;
  spec << cfg.ensemble.describe() << ";n=" << cfg.n << ";p=" << cfg.p << ";samples=" << cfg.samples
       << ";seed=" << cfg.seed;
  const auto per_cell = static_cast<std::size_t>(cfg.samples);
  return run_ensemble(
      "weak_holder", spec.str(), per_cell * cfg.cells.size(), cfg.workers,
      [&](std::size_t i) { return weak_holder_sample(cfg, i); },
      [&](std::size_t i) { return cell_group(cfg.cells[i / per_cell]); });
}

// ---- operator Lipschitz -------------------------------------------------------

std::optional<double> operator_lipschitz_sample(const LipschitzConfig& cfg, std::size_t index) {
  const auto per_p = static_cast<std::size_t>(cfg.samples);
  if (cfg.ps.empty() || cfg.samples < 1) throw Error("operator_lipschitz_sample: empty ensemble");
  if (index >= per_p * cfg.ps.size()) throw Error("operator_lipschitz_sample: index out of range");
  const PhaseSpaceRep rep = build_harmonic_rep(1, cfg.n, cfg.hbar);
  const DensityOperator rho =
      embedded_random_density(rep, std::max(2, cfg.n / 4), 3, substream_seed(cfg.seed, index % per_p));
  const LipschitzSample s =
      check_operator_lipschitz(rho, rep, [](double x) { return std::tanh(x); }, 1.0, cfg.ps[index / per_p]);
  if (s.degenerate) return std::nullopt;
  return s.ratio;
}

EmpiricalConstant estimate_operator_lipschitz(const LipschitzConfig& cfg) {
  const auto per_p = static_cast<std::size_t>(cfg.samples);
  std::ostringstream spec;
  spec << "u=tanh;random rank-3 states;N=" << cfg.n << ";hbar=" << cfg.hbar << ";seed=" << cfg.seed;
  return run_ensemble(
      "operator_lipschitz", spec.str(), per_p * cfg.ps.size(), cfg.workers,
      [&](std::size_t i) { return operator_lipschitz_sample(cfg, i); },
      [&](std::size_t i) {
        std::ostringstream g;
        g << "p=" << cfg.ps[i / per_p];
        return g.str();
      });
}

double refinement_change(const EmpiricalConstant& c, const std::vector<HolderCell>& cells) {
  double worst = 0.0;
  auto rel = [](double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    return m > 0.0 ? std::abs(a - b) / m : 0.0;
  };
  for (const auto& coarse : cells) {
    for (const auto& fine : cells) {
      if (fine.hbar != coarse.hbar || fine.n != 2 * coarse.n) continue;
      const auto a = c.per_group.find(cell_group(coarse));
      const auto b = c.per_group.find(cell_group(fine));
      if (a == c.per_group.end() || b == c.per_group.end()) continue;
      worst = std::max({worst, rel(a->second.q50, b->second.q50), rel(a->second.max_ratio, b->second.max_ratio)});
    }
  }
  return worst;
}

}  // namespace qskew
