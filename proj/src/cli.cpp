#include "qskew/cli.hpp"

#include "qskew/classical.hpp"
#include "qskew/conjecture.hpp"
#include "qskew/constants.hpp"
#include "qskew/inequalities.hpp"
#include "qskew/parallel.hpp"
#include "qskew/random.hpp"
#include "qskew/report.hpp"
#include "qskew/states.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace qskew {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::set<std::string> kFamilyNames{"ground", "thermal", "squeezed", "coherent", "random"};
const std::vector<std::string> kEstimatorNames{"conjecture_31", "quantum_holder", "weak_holder",
                                               "operator_lipschitz"};
const std::set<std::string> kObjectives{"skew_violation"};

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("config key '") + key + "' has the wrong type");
  }
}

FamilySpec parse_family(const json& j) {
  FamilySpec f;
  if (j.is_string()) {
    f.name = j.get<std::string>();
  } else if (j.is_object() && j.contains("name") && j["name"].is_string()) {
    f.name = j["name"].get<std::string>();
    f.params = j;
    f.params.erase("name");
  } else {
    throw UsageError("family entries must be a name or an object with a \"name\" key");
  }
  if (!kFamilyNames.count(f.name)) throw UsageError("unknown state family '" + f.name + "'");
  for (const auto& [key, value] : f.params.items()) {
    if (!value.is_number()) throw UsageError("family parameter '" + key + "' must be a number");
  }
  return f;
}

double param(const FamilySpec& f, const char* key, double fallback) {
  return f.params.contains(key) ? f.params[key].get<double>() : fallback;
}

std::string family_label(const FamilySpec& f) { return f.name; }

void ensure_dir(const fs::path& p) {
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw UsageError("cannot create output directory " + p.string() + ": " + ec.message());
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw UsageError("cannot write " + p.string());
  os << content;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json real_json(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

// ---- state families ---------------------------------------------------------

struct LabeledState {
  std::string label;
  DensityOperator rho;
};

std::vector<LabeledState> family_states(const FamilySpec& f, const PhaseSpaceRep& rep, std::uint64_t seed) {
  if (f.name == "ground") return {{"ground", ground_state(rep)}};
  if (f.name == "thermal") {
    const double beta = param(f, "beta", 2.0);
    return {{"beta=" + format_real(beta), thermal_state(rep, beta)}};
  }
  if (f.name == "squeezed") {
    const double s = param(f, "s", 0.5);
    return {{"s=" + format_real(s), squeezed_vacuum(rep, s)}};
  }
  if (f.name == "coherent") {
    const cplx alpha(param(f, "re", 1.0), param(f, "im", 0.5));
    return {{"alpha=" + format_real(alpha.real()) + "+" + format_real(alpha.imag()) + "i",
             coherent_state(rep, alpha)}};
  }
  const int count = static_cast<int>(param(f, "count", 4));
  const int rank = static_cast<int>(param(f, "rank", 3));
  const int support = static_cast<int>(param(f, "support", std::max(2, rep.n_per_axis() / 4)));
  std::vector<LabeledState> out;
  for (int k = 0; k < count; ++k) {
    out.push_back({"random#" + std::to_string(k),
                   embedded_random_density(rep, support, rank, substream_seed(seed, static_cast<std::uint64_t>(k)))});
  }
  return out;
}

std::string hbar_tag(double hbar) { return "hbar=" + format_real(hbar); }

RatioReport renamed(RatioReport r, const std::string& prefix) {
  r.name = prefix + ":" + r.name;
  return r;
}

// ---- verify -------------------------------------------------------------------

struct Cell {
  std::string suite;
  std::string family;
  bool asserted = true;
  std::function<std::vector<RatioReport>()> run;
};

struct CellResult {
  std::vector<RatioReport> rows;
  std::string error;
};

std::vector<RatioReport> hierarchy_rows(const RunConfig& cfg, bool pure) {
  std::vector<RatioReport> rows;
  for (int d : cfg.dims) {
    for (int i = 0; i < cfg.samples; ++i) {
      const auto idx = static_cast<std::uint64_t>(d) * 1000003ULL + static_cast<std::uint64_t>(i);
      PinnedRng rng(substream_seed(cfg.seed, idx));
      const Index rank = pure ? 1 : 1 + static_cast<Index>(i % d);
      const DensityOperator rho = sample_random_density(d, rank, substream_seed(cfg.seed ^ 0x5a5aULL, idx));
      const HermitianOperator k(rng.hermitian(d));
      const HierarchyReport h = check_hierarchy(rho, k, cfg.exact_slack_tol);
      const std::string tag = "dim=" + std::to_string(d) + ";draw=" + std::to_string(i);
      rows.push_back(renamed(h.variance_vs_sld, tag));
      rows.push_back(renamed(h.sld_vs_skew, tag));
    }
  }
  return rows;
}

using StateSuite = std::function<void(const LabeledState&, const PhaseSpaceRep&, const std::string&,
                                      std::vector<RatioReport>&)>;

std::function<std::vector<RatioReport>()> over_states(const RunConfig& cfg, const FamilySpec& f, int d, int n,
                                                      StateSuite body) {
  return [&cfg, f, d, n, body] {
    std::vector<RatioReport> rows;
    for (double hbar : cfg.hbars) {
      const PhaseSpaceRep rep = build_harmonic_rep(d, n, hbar);
      for (const auto& s : family_states(f, rep, cfg.seed)) body(s, rep, hbar_tag(hbar) + ";" + s.label, rows);
    }
    return rows;
  };
}

std::vector<RatioReport> classical_rows(const RunConfig& cfg, UncertaintyConvention convention) {
  const GridSpec grid = GridSpec::symmetric(12.0, 256, 12.0, 256);
  const GridField2D f = gaussian_density(0.8, 1.2).sample(grid);
  std::vector<RatioReport> rows;
  for (const char* name : {"rotation", "shear", "stretch"}) {
    const double param_value = std::string(name) == "rotation" ? 0.7 : 0.5;
    rows.push_back(renamed(
        check_classical_uncertainty_1d(f, DiffeoPair::by_name(name, param_value), convention, cfg.slack_tol), name));
  }
  if (convention == UncertaintyConvention::as_stated) return rows;
  for (double p : cfg.ps) rows.push_back(check_classical_sobolev_scaling(f, p, cfg.slack_tol));
  const auto a = DifferentiatedField::from_analytic(gaussian_density(0.8, 1.2), grid);
  const auto b = DifferentiatedField::from_analytic(gaussian_density(1.1, 0.7), grid);
  const BracketHolderReport bh = check_bracket_holder(a, b, 1.0, 2.0, 2.0, cfg.exact_slack_tol);
  rows.push_back(bh.holder);
  rows.push_back(bh.gradient_form);
  const ChangeOfVariables cv =
      change_of_variables(gaussian_density(0.8, 1.2), DiffeoPair::rotation(0.7), 2.0, grid);
  rows.push_back(make_ratio_report("change_of_variables_rotation_ge", cv.direct, cv.transformed, Relation::ge,
                                   cfg.slack_tol));
  rows.push_back(make_ratio_report("change_of_variables_rotation_le", cv.direct, cv.transformed, Relation::le,
                                   cfg.slack_tol));
  return rows;
}

std::vector<Cell> verify_cells(const RunConfig& cfg) {
  std::vector<Cell> cells;
  cells.push_back({"hierarchy", "random", true, [&cfg] { return hierarchy_rows(cfg, false); }});
  cells.push_back({"hierarchy", "pure", true, [&cfg] { return hierarchy_rows(cfg, true); }});
  for (const FamilySpec& f : cfg.families) {
    const std::string fam = family_label(f);
    cells.push_back({"heisenberg", fam, true,
                     over_states(cfg, f, 1, cfg.n, [&cfg](const LabeledState& s, const PhaseSpaceRep& rep,
                                                          const std::string& tag, std::vector<RatioReport>& rows) {
                       rows.push_back(renamed(check_heisenberg(s.rho, rep.x(0), rep.p(0), cfg.exact_slack_tol), tag));
                     })});
    cells.push_back({"cramer_rao", fam, true,
                     over_states(cfg, f, 1, cfg.n, [&cfg](const LabeledState& s, const PhaseSpaceRep& rep,
                                                          const std::string& tag, std::vector<RatioReport>& rows) {
                       const CramerRaoReport c = check_cramer_rao(s.rho, rep.x(0), rep.p(0), cfg.exact_slack_tol);
                       RatioReport r = renamed(c.bound, tag);
                       r.pass = c.pass();
                       rows.push_back(r);
                     })});
    cells.push_back({"theorem_1d", fam, true,
                     over_states(cfg, f, 1, cfg.n, [&cfg](const LabeledState& s, const PhaseSpaceRep& rep,
                                                          const std::string& tag, std::vector<RatioReport>& rows) {
                       for (double p : cfg.ps) {
                         rows.push_back(renamed(check_theorem_1d(s.rho, rep, p, cfg.slack_tol),
                                                tag + ";p=" + format_real(p)));
                       }
                     })});
    cells.push_back({"theorem_d", fam, true,
                     over_states(cfg, f, 2, cfg.n_2d, [&cfg](const LabeledState& s, const PhaseSpaceRep& rep,
                                                             const std::string& tag, std::vector<RatioReport>& rows) {
                       rows.push_back(renamed(check_theorem_d(s.rho, rep, ConstantChoice::upper, cfg.slack_tol), tag));
                     })});
    cells.push_back({"sandwich", fam, true,
                     over_states(cfg, f, 1, cfg.n, [&cfg](const LabeledState& s, const PhaseSpaceRep& rep,
                                                          const std::string& tag, std::vector<RatioReport>& rows) {
                       for (double p : cfg.ps) {
                         const SandwichReport sw =
                             fourier_sandwich(s.rho, rep, p, logspace(1e-4, 1.0, 9), cfg.exact_slack_tol);
                         const std::string t = tag + ";p=" + format_real(p);
                         rows.push_back(renamed(sw.upper, t));
                         rows.push_back(renamed(sw.lower, t));
                       }
                     })});
  }
  cells.push_back({"classical", "gaussian", true,
                   [&cfg] { return classical_rows(cfg, UncertaintyConvention::chain_rule_corrected); }});
  // The printed constant is refuted by the Gaussian computation; reported, not asserted.
  cells.push_back(
      {"classical", "as_stated", false, [&cfg] { return classical_rows(cfg, UncertaintyConvention::as_stated); }});
  return cells;
}

json cell_summary(const Cell& c, const CellResult& r) {
  std::size_t failures = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& row : r.rows) {
    failures += row.pass ? 0 : 1;
    min_ratio = std::min(min_ratio, row.ratio);
  }
  json j = {{"suite", c.suite},
            {"family", c.family},
            {"asserted", c.asserted},
            {"rows", r.rows.size()},
            {"failures", failures},
            {"min_ratio", r.rows.empty() ? json(nullptr) : real_json(min_ratio)},
            {"pass", r.error.empty() && (!c.asserted || failures == 0)}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

void write_run_info(const RunConfig& cfg, const std::string& command, const std::string& started) {
  const json j = {{"command", command}, {"started_utc", started}, {"finished_utc", utc_now()}, {"seed", cfg.seed}};
  write_file(fs::path(cfg.out) / "run_info.json", j.dump(2) + "\n");
}

std::optional<std::size_t> parse_index_label(const std::string& label) {
  const std::string prefix = "index=";
  if (label.rfind(prefix, 0) != 0) return std::nullopt;
  return static_cast<std::size_t>(std::stoull(label.substr(prefix.size())));
}

std::vector<double> parse_number_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  return out;
}

}  // namespace

// ---- configuration ------------------------------------------------------------

RunConfig RunConfig::defaults() {
  RunConfig c;
  for (const char* name : {"ground", "thermal", "squeezed", "coherent", "random"}) c.families.push_back({name, json::object()});
  c.dims = {2, 3, 4, 5, 6, 7, 8};
  c.samples = 12;
  c.n = 64;
  c.n_2d = 16;
  c.hbars = {1.0, 0.1};
  c.ps = {1.25, 1.5, 2.0, 3.0, 4.0};
  c.estimators = kEstimatorNames;
  return c;
}

RunConfig RunConfig::from_json(const json& j, const RunConfig& base) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  RunConfig c = base;
  for (const auto& [key, value] : j.items()) {
    const char* k = key.c_str();
    if (key == "families") {
      if (!value.is_array()) throw UsageError("'families' must be an array");
      c.families.clear();
      for (const auto& f : value) c.families.push_back(parse_family(f));
    } else if (key == "dims") {
      c.dims = get_as<std::vector<int>>(value, k);
    } else if (key == "samples") {
      c.samples = get_as<int>(value, k);
    } else if (key == "n") {
      c.n = get_as<int>(value, k);
    } else if (key == "n_2d") {
      c.n_2d = get_as<int>(value, k);
    } else if (key == "hbars") {
      c.hbars = get_as<std::vector<double>>(value, k);
    } else if (key == "ps") {
      c.ps = get_as<std::vector<double>>(value, k);
    } else if (key == "estimators") {
      c.estimators = get_as<std::vector<std::string>>(value, k);
    } else if (key == "seed") {
      c.seed = get_as<std::uint64_t>(value, k);
    } else if (key == "workers") {
      c.workers = get_as<int>(value, k);
    } else if (key == "out") {
      c.out = get_as<std::string>(value, k);
    } else if (key == "slack_tol") {
      c.slack_tol = get_as<double>(value, k);
    } else if (key == "exact_slack_tol") {
      c.exact_slack_tol = get_as<double>(value, k);
    } else if (key == "format") {
      c.format = get_as<std::string>(value, k);
    } else if (key == "search") {
      if (!value.is_object()) throw UsageError("'search' must be an object");
      for (const auto& [sk, sv] : value.items()) {
        if (sk == "objective") {
          c.search.objective = get_as<std::string>(sv, "search.objective");
        } else if (sk == "dim") {
          c.search.dim = get_as<Index>(sv, "search.dim");
        } else if (sk == "budget") {
          c.search.budget = get_as<long long>(sv, "search.budget");
        } else if (sk == "restarts") {
          c.search.restarts = get_as<int>(sv, "search.restarts");
        } else {
          throw UsageError("unknown config key 'search." + sk + "'");
        }
      }
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  return c;
}

void RunConfig::validate() const {
  if (families.empty()) throw UsageError("family list is empty");
  if (dims.empty() || hbars.empty() || ps.empty()) throw UsageError("dims, hbars and ps must be non-empty");
  if (estimators.empty()) throw UsageError("estimator list is empty");
  for (int d : dims) {
    if (d < 2) throw UsageError("dims must be >= 2");
  }
  for (double h : hbars) {
    if (!(h > 0.0)) throw UsageError("hbars must be positive");
  }
  for (double p : ps) {
    if (!(p > 1.0) || std::isinf(p)) throw UsageError("ps must lie in (1, inf)");
  }
  for (const auto& e : estimators) {
    if (std::find(kEstimatorNames.begin(), kEstimatorNames.end(), e) == kEstimatorNames.end()) {
      throw UsageError("unknown estimator '" + e + "'");
    }
  }
  if (samples < 1) throw UsageError("samples must be >= 1");
  if (n < 4 || n_2d < 4) throw UsageError("n and n_2d must be >= 4");
  if (workers < 1) throw UsageError("workers must be >= 1");
  if (!(slack_tol >= 0.0) || !(exact_slack_tol >= 0.0)) throw UsageError("slack tolerances must be >= 0");
  if (format != "csv" && format != "json") throw UsageError("format must be csv or json");
  if (!kObjectives.count(search.objective)) throw UsageError("unknown objective '" + search.objective + "'");
  if (search.dim < 2) throw UsageError("search.dim must be >= 2");
  if (search.budget < 0) throw UsageError("search.budget must be >= 0");
  if (search.restarts < 1) throw UsageError("search.restarts must be >= 1");
}

json RunConfig::to_json() const {
  json fams = json::array();
  for (const auto& f : families) {
    json e = f.params;
    e["name"] = f.name;
    fams.push_back(e);
  }
  return {{"families", fams},
          {"dims", dims},
          {"samples", samples},
          {"n", n},
          {"n_2d", n_2d},
          {"hbars", hbars},
          {"ps", ps},
          {"estimators", estimators},
          {"search",
           {{"objective", search.objective},
            {"dim", search.dim},
            {"budget", search.budget},
            {"restarts", search.restarts}}},
          {"seed", seed},
          {"slack_tol", slack_tol},
          {"exact_slack_tol", exact_slack_tol}};
}

RunConfig load_run_config(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("config " + path + " is not valid JSON: " + e.what());
  }
  return RunConfig::from_json(j, base);
}

// ---- commands -----------------------------------------------------------------

int run_verify(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const std::string started = utc_now();
  const std::vector<Cell> cells = verify_cells(cfg);
  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), cfg.workers, [&](std::size_t i) {
    try {
      results[i].rows = cells[i].run();
    } catch (const Error& e) {
      results[i].error = e.what();
    }
  });

  json summary = {{"command", "verify"}, {"config", cfg.to_json()}};
  json suites = json::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const fs::path dir = fs::path(cfg.out) / cells[i].suite / cells[i].family;
    ensure_dir(dir);
    std::ostringstream csv;
    write_ratio_csv(csv, results[i].rows);
    write_file(dir / "report.csv", csv.str());
    const json cs = cell_summary(cells[i], results[i]);
    write_file(dir / "summary.json", cs.dump(2) + "\n");
    suites.push_back(cs);
    all_pass = all_pass && cs["pass"].get<bool>();
  }
  summary["suites"] = suites;
  summary["pass"] = all_pass;
  write_file(fs::path(cfg.out) / "summary.json", summary.dump(2) + "\n");
  write_run_info(cfg, "verify", started);

  if (cfg.format == "json") {
    out << summary.dump(2) << "\n";
  } else {
    out << "suite,family,asserted,rows,failures,min_ratio,pass\n";
    for (const auto& s : suites) {
      out << s["suite"].get<std::string>() << ',' << s["family"].get<std::string>() << ','
          << (s["asserted"].get<bool>() ? "true" : "false") << ',' << s["rows"].get<std::size_t>() << ','
          << s["failures"].get<std::size_t>() << ','
          << (s["min_ratio"].is_number() ? format_real(s["min_ratio"].get<double>())
                                         : (s["min_ratio"].is_string() ? s["min_ratio"].get<std::string>() : ""))
          << ',' << (s["pass"].get<bool>() ? "true" : "false") << "\n";
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].asserted) continue;
    if (!results[i].error.empty()) {
      out << "ERROR " << cells[i].suite << "/" << cells[i].family << ": " << results[i].error << "\n";
    }
    for (const auto& row : results[i].rows) {
      if (!row.pass) {
        out << "FAIL " << cells[i].suite << "/" << cells[i].family << " " << row.name
            << " ratio=" << format_real(row.ratio) << "\n";
      }
    }
  }
  return all_pass ? kExitPass : kExitFailure;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const std::string started = utc_now();
  json summary = {{"command", "sweep"}, {"config", cfg.to_json()}};
  json entries = json::array();
  bool all_pass = true;
  for (const std::string& name : cfg.estimators) {
    EmpiricalConstant c;
    std::function<std::optional<double>(std::size_t)> regenerate;
    std::optional<double> refinement;
    if (name == "conjecture_31") {
      Conjecture31Config e;
      e.seed = cfg.seed;
      e.workers = cfg.workers;
      c = estimate_conjecture_31(e);
      regenerate = [e](std::size_t i) { return conjecture_31_sample(e, i); };
    } else if (name == "quantum_holder") {
      HolderConfig e;
      e.samples = cfg.samples;
      e.seed = cfg.seed;
      e.workers = cfg.workers;
      c = estimate_quantum_holder(e);
      regenerate = [e](std::size_t i) { return quantum_holder_sample(e, i); };
      refinement = refinement_change(c, e.cells);
    } else if (name == "weak_holder") {
      WeakHolderConfig e;
      e.samples = cfg.samples;
      e.seed = cfg.seed;
      e.workers = cfg.workers;
      c = estimate_weak_holder(e);
      regenerate = [e](std::size_t i) { return weak_holder_sample(e, i); };
      refinement = refinement_change(c, e.cells);
    } else {
      LipschitzConfig e;
      e.ps = cfg.ps;
      e.samples = cfg.samples;
      e.seed = cfg.seed;
      e.workers = cfg.workers;
      c = estimate_operator_lipschitz(e);
      regenerate = [e](std::size_t i) { return operator_lipschitz_sample(e, i); };
    }

    // The argmax sample is rebuilt from its index and must reproduce the maximum.
    double reverify_error = 0.0;
    if (!c.samples.empty()) {
      const auto idx = parse_index_label(c.argmax.label);
      const auto again = idx ? regenerate(*idx) : std::nullopt;
      reverify_error = again ? std::abs(*again - c.argmax.ratio) : std::numeric_limits<double>::infinity();
    }
    const bool reverified = reverify_error <= 1e-10;
    all_pass = all_pass && reverified;

    const fs::path dir = fs::path(cfg.out) / "sweep" / name;
    ensure_dir(dir);
    std::ostringstream csv;
    write_samples_csv(csv, c);
    write_file(dir / "report.csv", csv.str());
    json j = json::parse(c.to_json());
    j["argmax_reverify_error"] = real_json(reverify_error);
    j["argmax_reverified"] = reverified;
    if (refinement) j["refinement_change"] = *refinement;
    write_file(dir / "summary.json", j.dump(2) + "\n");
    entries.push_back(j);

    if (cfg.format == "csv") {
      out << name << ": samples=" << c.sample_count << " skipped=" << c.skipped
          << " max=" << format_real(c.overall.max_ratio) << " q50=" << format_real(c.overall.q50)
          << " q90=" << format_real(c.overall.q90) << " q99=" << format_real(c.overall.q99)
          << " argmax=" << c.argmax.group << "/" << c.argmax.label << (reverified ? " reverified" : " NOT-REPRODUCED");
      if (refinement) out << " refinement_change=" << format_real(*refinement);
      out << "\n";
    }
  }
  summary["estimators"] = entries;
  summary["pass"] = all_pass;
  write_file(fs::path(cfg.out) / "summary.json", summary.dump(2) + "\n");
  write_run_info(cfg, "sweep", started);
  if (cfg.format == "json") out << summary.dump(2) << "\n";
  return all_pass ? kExitPass : kExitFailure;
}

int run_search(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const std::string started = utc_now();
  const SearchSettings& s = cfg.search;
  const SearchResult r = search_skew_violation(s.dim, s.budget, cfg.seed, s.restarts, cfg.workers);
  const fs::path dir = fs::path(cfg.out) / "search" / s.objective;
  save_witness(r, dir.string());

  const SkewObjective o = skew_violation_objective(r.witness_state, r.witness_a, r.witness_b);
  const RatioReport row =
      make_ratio_report(s.objective, std::sqrt(o.skew_a * o.skew_b), o.half_commutator, Relation::ge, 0.0,
                        digest_matrices({&r.witness_state.matrix(), &r.witness_a.matrix(), &r.witness_b.matrix()}));
  std::ostringstream csv;
  write_ratio_csv(csv, {row});
  write_file(dir / "report.csv", csv.str());
  json summary = json::parse(r.to_json());
  summary["command"] = "search";
  write_file(dir / "summary.json", summary.dump(2) + "\n");
  write_file(fs::path(cfg.out) / "summary.json", summary.dump(2) + "\n");
  write_run_info(cfg, "search", started);

  if (cfg.format == "json") {
    out << summary.dump(2) << "\n";
  } else {
    out << s.objective << ": dim=" << r.dim << " best_ratio=" << format_real(r.best_ratio)
        << " evaluations=" << r.iterations << " converged=" << (r.converged ? "true" : "false")
        << " witness=" << dir.string() << "\n";
  }
  return kExitPass;
}

int run_replay(const std::string& witness_dir, std::ostream& out) {
  SearchResult r;
  try {
    r = load_witness(witness_dir);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const double spectral = reverify_witness(r);
  const double direct =
      skew_violation_objective(r.witness_state, r.witness_a, r.witness_b, SkewMethod::commutator).ratio;
  const double err = std::max(std::abs(spectral - r.best_ratio), std::abs(direct - r.best_ratio));
  const bool ok = err <= 1e-10;
  out << "stored=" << format_real(r.best_ratio) << " commutator=" << format_real(direct)
      << " spectral=" << format_real(spectral) << " max_error=" << format_real(err)
      << (ok ? " reproduced" : " NOT-REPRODUCED") << "\n";
  return ok ? kExitPass : kExitFailure;
}

int run_constants(const RunConfig& cfg, std::ostream& out) {
  const ConstantsTable t = ConstantsTable::compute({2, 3, 4, 5, 6}, {0.25, 0.5, 0.75});
  const fs::path dir = fs::path(cfg.out) / "constants";
  ensure_dir(dir);
  write_file(dir / "constants.json", t.to_json() + "\n");
  write_file(dir / "constants.txt", t.to_text());
  out << (cfg.format == "json" ? t.to_json() + "\n" : t.to_text());
  return kExitPass;
}

// ---- argument parsing ---------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qskew: uncertainty inequalities for skew information and their numerical checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir, format, witness, objective, estimators, hbars, ps;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<double> slack;
  std::optional<Index> dim;
  std::optional<long long> budget;
  std::optional<int> restarts;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--seed", seed, "seed for stochastic commands");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--workers", workers, "worker threads");
  app.add_option("--slack-tol", slack, "slack tolerance for truncated checks");
  app.add_option("--format", format, "stdout format: csv or json");
  app.add_option("--hbars", hbars, "comma-separated hbar values");
  app.add_option("--ps", ps, "comma-separated Schatten exponents");

  auto* verify = app.add_subcommand("verify", "run every proved-inequality suite");
  auto* sweep = app.add_subcommand("sweep", "empirical constants for the open inequalities");
  sweep->add_option("--estimators", estimators, "comma-separated estimator names");
  auto* search = app.add_subcommand("search", "counterexample search");
  search->add_option("--objective", objective, "objective name (skew_violation)");
  search->add_option("--dim", dim, "Hilbert-space dimension");
  search->add_option("--budget", budget, "objective evaluations");
  search->add_option("--restarts", restarts, "random restarts");
  auto* replay = app.add_subcommand("replay", "re-evaluate a stored witness");
  replay->add_option("--witness", witness, "witness directory")->required();
  auto* constants = app.add_subcommand("constants", "print the constants table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (replay->parsed()) return run_replay(witness, out);

    RunConfig cfg = config_path.empty() ? RunConfig::defaults() : load_run_config(config_path);
    if (seed) cfg.seed = *seed;
    if (!out_dir.empty()) cfg.out = out_dir;
    if (workers) cfg.workers = *workers;
    if (slack) cfg.slack_tol = *slack;
    if (!format.empty()) cfg.format = format;
    if (!hbars.empty()) cfg.hbars = parse_number_list(hbars);
    if (!ps.empty()) cfg.ps = parse_number_list(ps);
    if (!objective.empty()) cfg.search.objective = objective;
    if (dim) cfg.search.dim = *dim;
    if (budget) cfg.search.budget = *budget;
    if (restarts) cfg.search.restarts = *restarts;
    if (!estimators.empty()) {
      cfg.estimators.clear();
      std::stringstream ss(estimators);
      for (std::string item; std::getline(ss, item, ',');) cfg.estimators.push_back(item);
    }
    cfg.validate();

    if (verify->parsed()) return run_verify(cfg, out);
    if (sweep->parsed()) return run_sweep(cfg, out);
    if (search->parsed()) return run_search(cfg, out);
    if (constants->parsed()) return run_constants(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qskew
