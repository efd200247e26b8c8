#include "qskew/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <ostream>

namespace qskew {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json real_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

nlohmann::json summary_json(const QuantileSummary& s) {
  return {{"count", s.count}, {"max_ratio", real_json(s.max_ratio)}, {"q50", real_json(s.q50)},
          {"q90", real_json(s.q90)}, {"q99", real_json(s.q99)}};
}

}  // namespace

RatioReport make_ratio_report(std::string name, double lhs, double rhs, Relation relation, double slack_tol,
                              std::string digest, double edge_mass) {
  RatioReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = relation;
  r.inputs_digest = std::move(digest);
  r.truncation_edge_mass = edge_mass;
  const double big = relation == Relation::ge ? lhs : rhs;
  const double small = relation == Relation::ge ? rhs : lhs;
  if (std::abs(small) <= kZeroFloor) {
    r.ratio = std::abs(big) <= kZeroFloor ? 1.0 : std::numeric_limits<double>::infinity();
  } else {
    r.ratio = big / small;
  }
  return with_slack(std::move(r), slack_tol);
}

RatioReport with_slack(RatioReport r, double slack_tol) {
  r.slack_tol = slack_tol;
  r.pass = r.ratio >= 1.0 - slack_tol;
  return r;
}

std::string digest_matrices(const std::vector<const Matrix*>& ms) {
  std::uint64_t h = kFnvOffset;
  for (const Matrix* m : ms) {
    const std::int64_t dims[2] = {m->rows(), m->cols()};
    fnv_mix(h, dims, sizeof dims);
    fnv_mix(h, m->data(), sizeof(cplx) * static_cast<std::size_t>(m->size()));
  }
  return hex64(h);
}

std::string digest_values(const std::vector<double>& values) {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, values.data(), sizeof(double) * values.size());
  return hex64(h);
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_ratio_csv(std::ostream& os, const std::vector<RatioReport>& rows) {
  os << kRatioCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.name << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ','
       << (r.relation == Relation::ge ? "ge" : "le") << ',' << format_real(r.ratio) << ','
       << (r.pass ? "true" : "false") << ',' << r.inputs_digest << ',' << format_real(r.truncation_edge_mass)
       << ',' << format_real(r.slack_tol) << '\n';
  }
}

std::string ratio_report_json(const RatioReport& r) {
  const nlohmann::json j = {{"name", r.name},
                            {"lhs", real_json(r.lhs)},
                            {"rhs", real_json(r.rhs)},
                            {"relation", r.relation == Relation::ge ? "ge" : "le"},
                            {"ratio", real_json(r.ratio)},
                            {"pass", r.pass},
                            {"inputs_digest", r.inputs_digest},
                            {"truncation_edge_mass", real_json(r.truncation_edge_mass)},
                            {"slack_tol", r.slack_tol}};
  return j.dump();
}

double nearest_rank_quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error("nearest_rank_quantile: empty sample");
  if (!(q > 0.0 && q <= 1.0)) throw Error("nearest_rank_quantile: q must lie in (0, 1]");
  const auto n = values.size();
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n);
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(rank - 1), values.end());
  return values[rank - 1];
}

QuantileSummary summarize(const std::vector<double>& values) {
  QuantileSummary s;
  s.count = values.size();
  if (values.empty()) return s;
  s.max_ratio = *std::max_element(values.begin(), values.end());
  s.q50 = nearest_rank_quantile(values, 0.5);
  s.q90 = nearest_rank_quantile(values, 0.9);
  s.q99 = nearest_rank_quantile(values, 0.99);
  return s;
}

EmpiricalConstant EmpiricalConstant::from_samples(std::string name, std::string ensemble_spec,
                                                  std::vector<RatioSample> samples, std::size_t skipped) {
  EmpiricalConstant c;
  c.name = std::move(name);
  c.ensemble_spec = std::move(ensemble_spec);
  c.sample_count = samples.size();
  c.skipped = skipped;
  std::vector<double> all;
  std::map<std::string, std::vector<double>> groups;
  for (const auto& s : samples) {
    all.push_back(s.ratio);
    groups[s.group].push_back(s.ratio);
  }
  c.overall = summarize(all);
  if (!samples.empty()) {
    // First sample attaining the maximum, so ties resolve deterministically.
    c.argmax = *std::max_element(samples.begin(), samples.end(),
                                 [](const RatioSample& a, const RatioSample& b) { return a.ratio < b.ratio; });
  }
  for (const auto& [g, v] : groups) c.per_group[g] = summarize(v);
  c.samples = std::move(samples);
  return c;
}

std::string EmpiricalConstant::to_json() const {
  nlohmann::json j = {{"name", name},
                      {"ensemble_spec", ensemble_spec},
                      {"sample_count", sample_count},
                      {"skipped", skipped},
                      {"overall", summary_json(overall)},
                      {"argmax", {{"ratio", real_json(argmax.ratio)}, {"group", argmax.group}, {"label", argmax.label}}}};
  nlohmann::json groups = nlohmann::json::object();
  for (const auto& [g, s] : per_group) groups[g] = summary_json(s);
  j["per_group"] = groups;
  return j.dump(2);
}

void write_samples_csv(std::ostream& os, const EmpiricalConstant& c) {
  os << kSampleCsvHeader << '\n';
  for (const auto& s : c.samples) os << s.group << ',' << s.label << ',' << format_real(s.ratio) << '\n';
}

}  // namespace qskew
