#include "qskew/matrix_io.hpp"
#include "qskew/operator_core.hpp"
#include "qskew/random.hpp"

#include "doctest.h"

#include <cmath>
#include <sstream>

using namespace qskew;

namespace {

Matrix diag(std::initializer_list<double> v) {
  Matrix m = Matrix::Zero(static_cast<Index>(v.size()), static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

}  // namespace

TEST_CASE("Hermitian construction validates and symmetrizes") {
  CHECK_NOTHROW(HermitianOperator(pauli_y()));
  Matrix bad = pauli_x();
  bad(0, 1) = 2.0;
  CHECK_THROWS_AS(HermitianOperator{bad}, NotHermitianError);
  CHECK_THROWS_AS(HermitianOperator(Matrix(2, 3)), DimensionError);

  Matrix nearly = pauli_x();
  nearly(0, 1) += 1e-14;
  const HermitianOperator h(nearly);
  CHECK(max_asymmetry(h.matrix()) == 0.0);
}

TEST_CASE("density operators reject bad trace and negative spectrum") {
  CHECK_THROWS_AS(DensityOperator(HermitianOperator(diag({0.5, 0.4}))), Error);
  CHECK_THROWS_AS(DensityOperator(HermitianOperator(diag({1.2, -0.2}))), NotPsdError);
  CHECK_THROWS_AS(DensityOperator::normalized(diag({0.0, 0.0})), Error);
  const DensityOperator rho = DensityOperator::normalized(diag({3.0, 1.0}));
  CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("spectral decomposition is sorted, phase-fixed and reconstructs") {
  PinnedRng rng(3);
  const HermitianOperator h(rng.hermitian(7));
  const SpectralDecomposition sd = spectral_decompose(h);
  for (Index i = 1; i < sd.dim(); ++i) CHECK(sd.eigenvalues(i - 1) >= sd.eigenvalues(i));
  CHECK((sd.reconstruct() - h.matrix()).norm() < 1e-12);
  CHECK((sd.eigenvectors.adjoint() * sd.eigenvectors - Matrix::Identity(7, 7)).norm() < 1e-12);
  for (Index c = 0; c < sd.dim(); ++c) {
    for (Index r = 0; r < sd.dim(); ++r) {
      if (std::abs(sd.eigenvectors(r, c)) > 1e-12) {
        CHECK(sd.eigenvectors(r, c).imag() == 0.0);
        CHECK(sd.eigenvectors(r, c).real() > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("matrix square root squares back") {
  const DensityOperator rho = sample_random_density(6, 3, 12);
  const Matrix s = matrix_sqrt_psd(rho).matrix();
  CHECK((s * s - rho.matrix()).norm() < 1e-12);
  const RealVector ev = spectral_decompose(HermitianOperator(s)).eigenvalues;
  CHECK(ev.minCoeff() > -1e-12);
}

TEST_CASE("Schatten norms on a diagonal matrix") {
  const Matrix m = diag({3.0, -4.0});
  CHECK(schatten_norm(m, 1.0) == doctest::Approx(7.0));
  CHECK(schatten_norm(m, 2.0) == doctest::Approx(5.0));
  CHECK(schatten_norm(m, SchattenExponent::infinity()) == doctest::Approx(4.0));
  CHECK(schatten_norm(m, 3.0) == doctest::Approx(std::cbrt(91.0)));
  CHECK_THROWS_AS(SchattenExponent(0.5), Error);
  CHECK(SchattenExponent(4.0).conjugate().value() == doctest::Approx(4.0 / 3.0));
  CHECK(SchattenExponent(1.0).conjugate().is_infinite());
}

TEST_CASE("Schatten norms are unitarily invariant and monotone in p") {
  PinnedRng rng(8);
  const Matrix a = rng.ginibre(5, 5);
  const Matrix u = rng.unitary(5);
  double prev = std::numeric_limits<double>::infinity();
  for (double p : {1.0, 1.5, 2.0, 3.0, 6.0}) {
    const double n = schatten_norm(a, p);
    CHECK(std::abs(schatten_norm(u * a * u.adjoint(), p) - n) < 1e-12 * n);
    CHECK(n <= prev * (1.0 + 1e-14));
    prev = n;
  }
}

TEST_CASE("Hölder for Schatten norms: ||AB||_1 <= ||A||_2 ||B||_2") {
  PinnedRng rng(21);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = rng.ginibre(4, 4);
    const Matrix b = rng.ginibre(4, 4);
    CHECK(schatten_norm(a * b, 1.0) <= schatten_norm(a, 2.0) * schatten_norm(b, 2.0) * (1.0 + 1e-12));
  }
}

TEST_CASE("scaled norm carries h^{d/p}") {
  const Matrix m = diag({1.0, 1.0});
  const double h = planck_h(0.5);
  CHECK(h == doctest::Approx(kPi));
  CHECK(scaled_schatten_norm(m, 2.0, 0.5, 1) == doctest::Approx(std::sqrt(h) * std::sqrt(2.0)));
  CHECK(scaled_schatten_norm(m, SchattenExponent::infinity(), 0.5, 3) == doctest::Approx(1.0));
  CHECK_THROWS(scaled_schatten_norm(m, 2.0, 0.0, 1));
}

TEST_CASE("commutators of Pauli matrices") {
  const Matrix c = commutator(pauli_x(), pauli_y());
  Matrix z = diag({1.0, -1.0});
  CHECK((c - 2.0 * kI * z).norm() < 1e-15);
  CHECK(anticommutator(pauli_x(), pauli_y()).norm() < 1e-15);
  CHECK_THROWS_AS(commutator(Matrix::Zero(2, 2), Matrix::Zero(3, 3)), DimensionError);
}

TEST_CASE("random densities are reproducible and have the requested rank") {
  const DensityOperator a = sample_random_density(5, 2, 99);
  const DensityOperator b = sample_random_density(5, 2, 99);
  CHECK(a.matrix() == b.matrix());
  const RealVector ev = a.spectrum().eigenvalues;
  CHECK(ev(1) > 1e-6);
  CHECK(std::abs(ev(2)) < 1e-12);
  CHECK_THROWS(sample_random_density(3, 4, 1));
}

TEST_CASE("substreams differ and the pinned generator is stable") {
  CHECK(substream_seed(1, 0) != substream_seed(1, 1));
  PinnedRng a(5), b(5);
  for (int i = 0; i < 10; ++i) CHECK(a.normal() == b.normal());
  PinnedRng c(5);
  const double u = c.uniform();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

TEST_CASE("matrix text format round-trips bit-exactly") {
  const DensityOperator rho = sample_random_density(4, 2, 7);
  std::stringstream ss;
  write_matrix(ss, rho.matrix(), MatrixKind::density);
  const MatrixRecord r = read_matrix(ss);
  CHECK(r.kind == MatrixKind::density);
  CHECK(r.matrix == rho.matrix());
  std::stringstream bad("dim=2 kind=hermitian\n0 0 1 0\n");
  CHECK_THROWS(read_matrix(bad));
}
