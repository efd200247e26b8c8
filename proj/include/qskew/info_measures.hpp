// info_measures.hpp: variance, Wigner-Yanase skew information and SLD Fisher information
//
// Every functional has two independent evaluation paths (an operator formula
// and a spectral double sum in the eigenbasis of rho) so each can validate the
// other. In the eigenbasis psi_j of rho with K_jk = <psi_j|K psi_k>:
//
//   I_K = 1/2 sum_{j,k} (sqrt(l_j) - sqrt(l_k))^2 |K_jk|^2
//   J_K = 2 sum_{j,k : l_j + l_k > tol} (l_j - l_k)^2 / (l_j + l_k) |K_jk|^2
//
// Both double sums run over ordered pairs (j, k).

#pragma once

#include "qskew/operator_core.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qskew {

inline constexpr double kSupportTol = 1e-12;

enum class SkewMethod { commutator, spectral };
enum class SldMethod { direct, spectral };
enum class Functional { variance, skew, sld };

Functional parse_functional(const std::string& name);
std::string to_string(Functional f);

// Tr(K^2 rho) - Tr(K rho)^2.
double variance(const DensityOperator& rho, const HermitianOperator& k);

double skew_information(const DensityOperator& rho, const HermitianOperator& k,
                        SkewMethod method = SkewMethod::commutator);

// Solution L of (L rho + rho L)/2 = (1/i)[K, rho] on the support of rho.
struct SLDOperator {
  HermitianOperator matrix;
  Index support_projector_rank = 0;
};

SLDOperator sld_operator(const DensityOperator& rho, const HermitianOperator& k,
                         double support_tol = kSupportTol);

// || (L rho + rho L)/2 - (1/i)[K, rho] ||_F restricted to the retained support.
double sld_residual(const DensityOperator& rho, const HermitianOperator& k, const SLDOperator& l,
                    double support_tol = kSupportTol);

double sld_fisher(const DensityOperator& rho, const HermitianOperator& k,
                  SldMethod method = SldMethod::direct, double support_tol = kSupportTol);

// Sum of a scalar functional over the components of a vector observable.
double vector_information(const DensityOperator& rho, const std::vector<HermitianOperator>& ops,
                          Functional functional);

struct InfoReport {
  double variance = 0.0;
  double skew_commutator = 0.0;
  double skew_spectral = 0.0;
  double sld_fisher_direct = 0.0;
  double sld_fisher_spectral = 0.0;
  double support_cutoff_used = kSupportTol;

  // sigma^2 - J/4 and J/4 - I; both non-negative up to rounding.
  double slack_variance_sld() const { return variance - 0.25 * sld_fisher_direct; }
  double slack_sld_skew() const { return 0.25 * sld_fisher_direct - skew_commutator; }
  std::string to_json() const;
};

InfoReport info_report(const DensityOperator& rho, const HermitianOperator& k,
                       double support_tol = kSupportTol);

// One batch row: dim,rank,seed,sigma2,I,J,slack1,slack2.
struct InfoBatchRow {
  Index dim = 0;
  Index rank = 0;
  std::uint64_t seed = 0;
  InfoReport report;
};

inline constexpr const char* kInfoBatchHeader = "dim,rank,seed,sigma2,I,J,slack1,slack2";
void write_info_batch_csv(std::ostream& os, const std::vector<InfoBatchRow>& rows);

}  // namespace qskew
