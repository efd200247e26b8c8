#include "qskew/info_measures.hpp"
#include "qskew/random.hpp"

#include "doctest.h"

#include <cmath>
#include <sstream>

using namespace qskew;

namespace {

struct Draw {
  DensityOperator rho;
  HermitianOperator k;
};

Draw draw(Index dim, Index rank, std::uint64_t seed) {
  PinnedRng rng(substream_seed(seed, 1));
  return {sample_random_density(dim, rank, seed), HermitianOperator(rng.hermitian(dim))};
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

TEST_CASE("two-level worked case") {
  Matrix r = Matrix::Zero(2, 2);
  r(0, 0) = 0.75;
  r(1, 1) = 0.25;
  Matrix sx(2, 2), sy(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, cplx(0, -1), cplx(0, 1), 0;
  const DensityOperator rho{HermitianOperator(r)};
  const HermitianOperator k(sx);

  CHECK(std::abs(variance(rho, k) - 1.0) < 1e-12);
  CHECK(std::abs(sld_fisher(rho, k) - 1.0) < 1e-12);
  CHECK(std::abs(sld_fisher(rho, k, SldMethod::spectral) - 1.0) < 1e-12);
  CHECK(std::abs(skew_information(rho, k) - (1.0 - std::sqrt(3.0) / 2.0)) < 1e-12);
  CHECK(std::abs(skew_information(rho, k, SkewMethod::spectral) - 0.1339745962155614) < 1e-12);
  const SLDOperator l = sld_operator(rho, k);
  CHECK((l.matrix.matrix() + sy).norm() < 1e-12);
  CHECK(l.support_projector_rank == 2);
  CHECK(sld_residual(rho, k, l) < 1e-12);
}

TEST_CASE("hierarchy sigma^2 >= J/4 >= I on random draws") {
  for (Index dim = 2; dim <= 8; ++dim) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const Index rank = 1 + static_cast<Index>(s % static_cast<std::uint64_t>(dim));
      const Draw d = draw(dim, rank, 1000 * static_cast<std::uint64_t>(dim) + s);
      const InfoReport r = info_report(d.rho, d.k);
      CHECK(r.slack_variance_sld() >= -1e-9);
      CHECK(r.slack_sld_skew() >= -1e-9);
    }
  }
}

TEST_CASE("dual evaluation paths agree") {
  for (Index dim : {2, 5, 9, 16}) {
    for (Index rank : {Index{1}, dim / 2, dim}) {
      if (rank < 1) continue;
      const Draw d = draw(dim, rank, 77 + static_cast<std::uint64_t>(dim * 31 + rank));
      const InfoReport r = info_report(d.rho, d.k);
      CHECK(rel(r.skew_commutator, r.skew_spectral) < 1e-8);
      CHECK(rel(r.sld_fisher_direct, r.sld_fisher_spectral) < 1e-8);
    }
  }
}

TEST_CASE("pure states: sigma^2 = J/4 = I") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Draw d = draw(2 + static_cast<Index>(s % 10), 1, 500 + s);
    const InfoReport r = info_report(d.rho, d.k);
    CHECK(std::abs(r.variance - 0.25 * r.sld_fisher_direct) < 1e-9);
    CHECK(std::abs(r.variance - r.skew_commutator) < 1e-9);
  }
}

TEST_CASE("SLD solves its defining equation on the support") {
  for (Index rank : {1, 3, 6}) {
    const Draw d = draw(6, rank, 4242 + static_cast<std::uint64_t>(rank));
    const SLDOperator l = sld_operator(d.rho, d.k);
    CHECK(l.support_projector_rank == rank);
    CHECK(sld_residual(d.rho, d.k, l) < 1e-10);
  }
}

TEST_CASE("functionals vanish on observables commuting with rho") {
  const DensityOperator rho = sample_random_density(4, 4, 3);
  const HermitianOperator k(rho.matrix() * rho.matrix());
  CHECK(std::abs(skew_information(rho, k)) < 1e-14);
  CHECK(std::abs(sld_fisher(rho, k)) < 1e-14);
}

TEST_CASE("unitary covariance and scaling") {
  const Draw d = draw(5, 3, 9);
  PinnedRng rng(10);
  const Matrix u = rng.unitary(5);
  const DensityOperator rho2{HermitianOperator(u * d.rho.matrix() * u.adjoint())};
  const HermitianOperator k2(u * d.k.matrix() * u.adjoint());
  CHECK(rel(skew_information(rho2, k2), skew_information(d.rho, d.k)) < 1e-10);
  CHECK(rel(sld_fisher(rho2, k2), sld_fisher(d.rho, d.k)) < 1e-10);
  const HermitianOperator k3(3.0 * d.k.matrix());
  CHECK(rel(skew_information(d.rho, k3), 9.0 * skew_information(d.rho, d.k)) < 1e-12);
}

TEST_CASE("skew information is convex in the state") {
  const Draw a = draw(4, 2, 1), b = draw(4, 3, 2);
  const DensityOperator mix{HermitianOperator(0.5 * (a.rho.matrix() + b.rho.matrix()))};
  const double lhs = skew_information(mix, a.k);
  CHECK(lhs <= 0.5 * (skew_information(a.rho, a.k) + skew_information(b.rho, a.k)) + 1e-12);
}

TEST_CASE("vector information sums components") {
  const Draw a = draw(3, 2, 5), b = draw(3, 2, 6);
  const double total = vector_information(a.rho, {a.k, b.k}, Functional::skew);
  CHECK(total == doctest::Approx(skew_information(a.rho, a.k) + skew_information(a.rho, b.k)));
  CHECK_THROWS(vector_information(a.rho, {}, Functional::variance));
  CHECK(parse_functional("sld") == Functional::sld);
  CHECK(to_string(Functional::variance) == "variance");
  CHECK_THROWS(parse_functional("entropy"));
}

TEST_CASE("dimension mismatch is rejected") {
  const Draw a = draw(3, 2, 5);
  const HermitianOperator k(Matrix::Identity(4, 4));
  CHECK_THROWS_AS(variance(a.rho, k), DimensionError);
  CHECK_THROWS_AS(skew_information(a.rho, k), DimensionError);
}

TEST_CASE("batch CSV header") {
  std::ostringstream os;
  const Draw a = draw(3, 2, 5);
  write_info_batch_csv(os, {{3, 2, 5, info_report(a.rho, a.k)}});
  const std::string s = os.str();
  CHECK(s.substr(0, s.find('\n')) == kInfoBatchHeader);
  CHECK(s.rfind("3,2,5,", s.find('\n') + 1) != std::string::npos);
}
