// conjecture.hpp: counterexample search and empirical constants for the open inequalities
//
// Estimators build a deterministic list of samples, evaluate each sample
// independently (optionally in parallel), and summarize the ratios. Any sample
// can be regenerated from its index, which is how argmax entries are re-verified.

#pragma once

#include "qskew/info_measures.hpp"
#include "qskew/phase_space.hpp"
#include "qskew/report.hpp"
#include "qskew/symbols.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qskew {

// min over lambda > 0 of lambda^e a + lambda^{-e} b: lambda* = (b/a)^{1/(2e)}, value 2 sqrt(ab).
struct ScalingOptimum {
  double lambda = 0.0;
  double value = 0.0;
};
ScalingOptimum optimize_scaling(double a, double b, double exponent);

// sqrt(I_A I_B) / (|Tr([A,B] rho)| / 2); values below 1 violate the skew analogue
// of the Heisenberg inequality.
struct SkewObjective {
  double ratio = 0.0;
  double skew_a = 0.0;
  double skew_b = 0.0;
  double half_commutator = 0.0;
};
SkewObjective skew_violation_objective(const DensityOperator& rho, const HermitianOperator& a,
                                       const HermitianOperator& b, SkewMethod method = SkewMethod::commutator);

inline constexpr int kDefaultRestarts = 32;
inline constexpr double kViolationMargin = 1e-6;

struct SearchResult {
  Index dim = 0;
  double best_ratio = 0.0;
  DensityOperator witness_state;
  HermitianOperator witness_a;
  HermitianOperator witness_b;
  long long iterations = 0;  // objective evaluations charged to the budget
  long long budget = 0;
  std::uint64_t seed = 0;
  int restarts = 0;
  int best_restart = -1;
  bool converged = false;  // a violation below 1 - kViolationMargin was found

  std::string to_json() const;
};

// Nelder-Mead over (G, A, B) with rho = G G* / Tr(G G*), from `restarts`
// random starts; each restart draws from its own substream and receives an
// equal share of `budget` evaluations. The initial points are always evaluated.
SearchResult search_skew_violation(Index dim, long long budget, std::uint64_t seed,
                                   int restarts = kDefaultRestarts, int workers = 1);

// Objective on the stored witness through the spectral skew path.
double reverify_witness(const SearchResult& r);

// Witness directory: rho.txt, a.txt, b.txt (matrix text format) and result.json.
void save_witness(const SearchResult& r, const std::string& dir);
SearchResult load_witness(const std::string& dir);

// Tr(|[A,B]| rho^2) / (||[A, sqrt rho]||_2 ||[B, sqrt rho]||_2); h-factors cancel.
struct Conjecture31Value {
  double ratio = 0.0;
  double lhs = 0.0;         // || |[A,B]|^{1/2} rho ||_2^2
  double lhs_trace = 0.0;   // Tr(|[A,B]| rho^2)
  double rhs = 0.0;
  bool skipped = false;     // rhs vanished
};
Conjecture31Value conjecture_31_ratio(const DensityOperator& rho, const HermitianOperator& a,
                                      const HermitianOperator& b);

struct Conjecture31Config {
  std::vector<double> hbars{1.0, 0.5, 0.1};
  int n = 32;
  int random_states = 4;
  std::uint64_t seed = 31;
  int workers = 1;
};
// Samples: (x,p) and the rotation/shear/stretch pairs, quantized, on named and
// random states, for each hbar. Labels encode the sample index.
EmpiricalConstant estimate_conjecture_31(const Conjecture31Config& cfg);
std::optional<double> conjecture_31_sample(const Conjecture31Config& cfg, std::size_t index);
std::size_t conjecture_31_sample_count(const Conjecture31Config& cfg);

// ||[A,B]||_{L^p} / (hbar ||grad A||_{L^q} ||grad B||_{L^r}), 1/p = 1/q + 1/r.
double quantum_holder_ratio(const Matrix& a, const Matrix& b, const PhaseSpaceRep& rep, double p, double q,
                            double r);

struct HolderCell {
  double hbar = 1.0;
  int n = 16;
};

struct HolderConfig {
  double p = 2.0, q = 4.0, r = 4.0;
  std::vector<HolderCell> cells{{1.0, 16}, {1.0, 32}, {0.25, 64}, {0.25, 128}};
  int samples = 12;
  std::uint64_t seed = 17;
  SymbolEnsemble ensemble;
  int workers = 1;
};
// Sample i uses the same pair of random symbols in every cell.
EmpiricalConstant estimate_quantum_holder(const HolderConfig& cfg);
std::optional<double> quantum_holder_sample(const HolderConfig& cfg, std::size_t index);

// ||[A,B]||_{L^p} / (||grad^{n+1} A||_{L^2}^{d/n} ||grad A||_{L^2}^{1-d/n} ||grad B||_{L^p}).
struct WeakHolderValue {
  double ratio = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  bool degenerate = false;
};
WeakHolderValue check_weak_holder(const Matrix& a, const Matrix& b, const PhaseSpaceRep& rep, int n, double p);

struct WeakHolderConfig {
  int n = 2;
  double p = 2.0;
  // Third-order gradients need more levels than the Hölder cells before N doubling settles.
  std::vector<HolderCell> cells{{1.0, 32}, {1.0, 64}, {0.5, 64}, {0.5, 128}};
  int samples = 12;
  std::uint64_t seed = 23;
  SymbolEnsemble ensemble;
  int workers = 1;
};
EmpiricalConstant estimate_weak_holder(const WeakHolderConfig& cfg);
std::optional<double> weak_holder_sample(const WeakHolderConfig& cfg, std::size_t index);

// Operator-Lipschitz ratios for u = tanh on random states of a d = 1 representation.
struct LipschitzConfig {
  std::vector<double> ps{1.5, 2.0, 3.0};
  double hbar = 1.0;
  int n = 32;
  int samples = 16;
  std::uint64_t seed = 29;
  int workers = 1;
};
EmpiricalConstant estimate_operator_lipschitz(const LipschitzConfig& cfg);
std::optional<double> operator_lipschitz_sample(const LipschitzConfig& cfg, std::size_t index);

// Largest relative change of the per-group q50 and max ratios between each
// (hbar, N) group and its (hbar, 2N) partner.
double refinement_change(const EmpiricalConstant& c, const std::vector<HolderCell>& cells);

}  // namespace qskew
