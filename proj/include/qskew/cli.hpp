// cli.hpp: batch front-end behind the qskew executable
//
// A run is described by one JSON document; command-line flags override its
// keys (defaults < config file < flags). Outputs go to
// out/{suite}/{family}/report.csv with a summary.json beside each report and
// a top-level summary.json. Wall-clock information is confined to
// out/run_info.json so that every other file is reproducible from
// (config, seed).
//
// Exit codes: 0 pass, 1 assertion failure, 2 usage or configuration error.

#pragma once

#include "qskew/types.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qskew {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

// A named state family with its parameters, e.g. {"name": "thermal", "beta": 2}.
struct FamilySpec {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
};

struct SearchSettings {
  std::string objective = "skew_violation";
  Index dim = 4;
  long long budget = 100000;
  int restarts = 32;
};

struct RunConfig {
  std::vector<FamilySpec> families;
  std::vector<int> dims;       // hierarchy suite dimensions
  int samples = 0;             // random draws per dimension (hierarchy) or per cell (sweeps)
  int n = 0;                   // levels for d = 1 representations
  int n_2d = 0;                // levels per axis for d = 2
  std::vector<double> hbars;
  std::vector<double> ps;
  std::vector<std::string> estimators;
  SearchSettings search;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out = "out";
  double slack_tol = 1e-6;        // truncated checks
  double exact_slack_tol = 1e-9;  // exact finite-dimensional checks
  std::string format = "csv";

  static RunConfig defaults();
  // Overlays the keys present in `j` on `base`; throws UsageError on unknown
  // keys, unknown names, or empty grids.
  static RunConfig from_json(const nlohmann::json& j, const RunConfig& base = defaults());
  void validate() const;
  nlohmann::json to_json() const;
};

RunConfig load_run_config(const std::string& path, const RunConfig& base = RunConfig::defaults());

int run_verify(const RunConfig& cfg, std::ostream& out);
int run_sweep(const RunConfig& cfg, std::ostream& out);
int run_search(const RunConfig& cfg, std::ostream& out);
int run_replay(const std::string& witness_dir, std::ostream& out);
int run_constants(const RunConfig& cfg, std::ostream& out);

// Entry point used by tools/qskew.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qskew
