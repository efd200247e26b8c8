#include "qskew/info_measures.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qskew {

namespace {

void require_match(const DensityOperator& rho, const HermitianOperator& k, const char* where) {
  require_same_dim(rho.matrix(), k.matrix(), where);
}

// K in the eigenbasis of rho.
Matrix in_eigenbasis(const DensityOperator& rho, const HermitianOperator& k) {
  const Matrix& v = rho.spectrum().eigenvectors;
  return v.adjoint() * k.matrix() * v;
}

RealVector clipped_eigenvalues(const DensityOperator& rho) { return denoised_eigenvalues(rho); }

}  // namespace

Functional parse_functional(const std::string& name) {
  if (name == "variance") return Functional::variance;
  if (name == "skew") return Functional::skew;
  if (name == "sld") return Functional::sld;
  throw Error("unknown functional '" + name + "' (expected variance, skew or sld)");
}

std::string to_string(Functional f) {
  switch (f) {
    case Functional::variance: return "variance";
    case Functional::skew: return "skew";
    case Functional::sld: return "sld";
  }
  return "?";
}

double variance(const DensityOperator& rho, const HermitianOperator& k) {
  require_match(rho, k, "variance");
  const Matrix kr = k.matrix() * rho.matrix();
  const double mean = kr.trace().real();
  const double second = (k.matrix() * kr).trace().real();
  return second - mean * mean;
}

double skew_information(const DensityOperator& rho, const HermitianOperator& k, SkewMethod method) {
  require_match(rho, k, "skew_information");
  if (method == SkewMethod::commutator) {
    const Matrix c = commutator(k.matrix(), matrix_sqrt_psd(rho).matrix());
    return 0.5 * c.squaredNorm();
  }
  const Matrix kk = in_eigenbasis(rho, k);
  const RealVector s = clipped_eigenvalues(rho).cwiseSqrt();
  double acc = 0.0;
  for (Index j = 0; j < s.size(); ++j) {
    for (Index l = 0; l < s.size(); ++l) {
      const double d = s(j) - s(l);
      acc += d * d * std::norm(kk(j, l));
    }
  }
  return 0.5 * acc;
}

SLDOperator sld_operator(const DensityOperator& rho, const HermitianOperator& k, double support_tol) {
  require_match(rho, k, "sld_operator");
  if (support_tol < 0.0) throw Error("sld_operator: support_tol must be non-negative");
  const Matrix kk = in_eigenbasis(rho, k);
  const RealVector lam = clipped_eigenvalues(rho);
  const Index n = lam.size();
  Matrix l = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index m = 0; m < n; ++m) {
      const double sum = lam(j) + lam(m);
      if (sum > support_tol) l(j, m) = (2.0 / kI) * kk(j, m) * ((lam(m) - lam(j)) / sum);
    }
  }
  SLDOperator out;
  for (Index j = 0; j < n; ++j) {
    if (2.0 * lam(j) > support_tol) ++out.support_projector_rank;
  }
  const Matrix& v = rho.spectrum().eigenvectors;
  const Matrix lm = v * l * v.adjoint();
  // Exact symmetrization first: an all-roundoff L would fail the relative check.
  out.matrix = HermitianOperator(0.5 * (lm + lm.adjoint()));
  return out;
}

double sld_residual(const DensityOperator& rho, const HermitianOperator& k, const SLDOperator& l,
                    double support_tol) {
  const Matrix& v = rho.spectrum().eigenvectors;
  const Matrix& r = rho.matrix();
  const Matrix lhs = 0.5 * anticommutator(l.matrix.matrix(), r);
  const Matrix rhs = commutator(k.matrix(), r) / kI;
  Matrix diff = v.adjoint() * (lhs - rhs) * v;
  const RealVector lam = clipped_eigenvalues(rho);
  for (Index j = 0; j < lam.size(); ++j) {
    for (Index m = 0; m < lam.size(); ++m) {
      if (lam(j) + lam(m) <= support_tol) diff(j, m) = 0.0;
    }
  }
  return diff.norm();
}

double sld_fisher(const DensityOperator& rho, const HermitianOperator& k, SldMethod method,
                  double support_tol) {
  require_match(rho, k, "sld_fisher");
  if (method == SldMethod::direct) {
    const SLDOperator l = sld_operator(rho, k, support_tol);
    const Matrix& lm = l.matrix.matrix();
    return (lm.adjoint() * lm * rho.matrix()).trace().real();
  }
  const Matrix kk = in_eigenbasis(rho, k);
  const RealVector lam = clipped_eigenvalues(rho);
  double acc = 0.0;
  for (Index j = 0; j < lam.size(); ++j) {
    for (Index m = 0; m < lam.size(); ++m) {
      const double sum = lam(j) + lam(m);
      if (sum <= support_tol) continue;
      const double d = lam(j) - lam(m);
      acc += d * d / sum * std::norm(kk(j, m));
    }
  }
  return 2.0 * acc;
}

double vector_information(const DensityOperator& rho, const std::vector<HermitianOperator>& ops,
                          Functional functional) {
  if (ops.empty()) throw Error("vector_information: empty observable list");
  double acc = 0.0;
  for (const auto& k : ops) {
    switch (functional) {
      case Functional::variance: acc += variance(rho, k); break;
      case Functional::skew: acc += skew_information(rho, k); break;
      case Functional::sld: acc += sld_fisher(rho, k); break;
    }
  }
  return acc;
}

InfoReport info_report(const DensityOperator& rho, const HermitianOperator& k, double support_tol) {
  InfoReport r;
  r.variance = variance(rho, k);
  r.skew_commutator = skew_information(rho, k, SkewMethod::commutator);
  r.skew_spectral = skew_information(rho, k, SkewMethod::spectral);
  r.sld_fisher_direct = sld_fisher(rho, k, SldMethod::direct, support_tol);
  r.sld_fisher_spectral = sld_fisher(rho, k, SldMethod::spectral, support_tol);
  r.support_cutoff_used = support_tol;
  return r;
}

std::string InfoReport::to_json() const {
  const nlohmann::json j = {{"variance", variance},
                            {"skew_commutator", skew_commutator},
                            {"skew_spectral", skew_spectral},
                            {"sld_fisher_direct", sld_fisher_direct},
                            {"sld_fisher_spectral", sld_fisher_spectral},
                            {"support_cutoff_used", support_cutoff_used}};
  return j.dump();
}

void write_info_batch_csv(std::ostream& os, const std::vector<InfoBatchRow>& rows) {
  os << kInfoBatchHeader << '\n';
  char buf[256];
  for (const auto& row : rows) {
    const auto& r = row.report;
    std::snprintf(buf, sizeof buf, "%lld,%lld,%llu,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  static_cast<long long>(row.dim), static_cast<long long>(row.rank),
                  static_cast<unsigned long long>(row.seed), r.variance, r.skew_commutator,
                  r.sld_fisher_direct, r.slack_variance_sld(), r.slack_sld_skew());
    os << buf;
  }
}

}  // namespace qskew
