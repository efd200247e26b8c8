// report.hpp: ratio reports for inequality checks and empirical-constant statistics

#pragma once

#include "qskew/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qskew {

inline constexpr double kExactSlack = 1e-9;
inline constexpr double kTruncatedSlack = 1e-6;
// Sides at or below this magnitude are treated as zero when forming ratios.
inline constexpr double kZeroFloor = 1e-13;

// Orientation of the inequality as written: lhs >= rhs or lhs <= rhs.
enum class Relation { ge, le };

// ratio is oriented so that the inequality holds iff ratio >= 1:
// lhs/rhs for ge, rhs/lhs for le. Both sides zero gives ratio 1; only the
// smaller side zero gives +inf.
struct RatioReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::ge;
  double ratio = 0.0;
  bool pass = false;
  std::string inputs_digest;
  double truncation_edge_mass = 0.0;
  double slack_tol = kExactSlack;
};

RatioReport make_ratio_report(std::string name, double lhs, double rhs, Relation relation,
                              double slack_tol = kExactSlack, std::string digest = {},
                              double edge_mass = 0.0);

// Same report with a different tolerance (pass is recomputed).
RatioReport with_slack(RatioReport r, double slack_tol);

// FNV-1a over the raw entries of the given matrices, as 16 hex digits.
std::string digest_matrices(const std::vector<const Matrix*>& ms);
std::string digest_values(const std::vector<double>& values);

inline constexpr const char* kRatioCsvHeader =
    "name,lhs,rhs,relation,ratio,pass,inputs_digest,truncation_edge_mass,slack_tol";
void write_ratio_csv(std::ostream& os, const std::vector<RatioReport>& rows);
std::string ratio_report_json(const RatioReport& r);
std::string format_real(double v);

// One observation of an empirical ratio.
struct RatioSample {
  double ratio = 0.0;
  std::string group;  // e.g. "hbar=1;N=16" (no commas: written to CSV unquoted)
  std::string label;  // how to regenerate the sample
};

struct QuantileSummary {
  std::size_t count = 0;
  double max_ratio = 0.0;
  double q50 = 0.0, q90 = 0.0, q99 = 0.0;
};

// Nearest-rank quantile of an unsorted sample (q in (0, 1]).
double nearest_rank_quantile(std::vector<double> values, double q);
QuantileSummary summarize(const std::vector<double>& values);

struct EmpiricalConstant {
  std::string name;
  std::string ensemble_spec;
  std::size_t sample_count = 0;
  std::size_t skipped = 0;
  QuantileSummary overall;
  RatioSample argmax;
  std::map<std::string, QuantileSummary> per_group;
  std::vector<RatioSample> samples;

  static EmpiricalConstant from_samples(std::string name, std::string ensemble_spec,
                                        std::vector<RatioSample> samples, std::size_t skipped);
  std::string to_json() const;
};

inline constexpr const char* kSampleCsvHeader = "group,label,ratio";
void write_samples_csv(std::ostream& os, const EmpiricalConstant& c);

}  // namespace qskew
