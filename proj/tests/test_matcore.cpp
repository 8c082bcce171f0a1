#include "oracle.hpp"
#include "tracemin/matcore.hpp"
#include "tracemin/spectral.hpp"

#include <doctest.h>

using namespace tracemin;

TEST_CASE("validate_hermitian accepts real diagonal") {
  Mat m = oracle::diag_of({1, 2});
  const auto h = validate_hermitian(m, 1e-10);
  CHECK(h.n() == 2);
  CHECK(h.herm_residual() == 0.0);
}

TEST_CASE("validate_hermitian accepts exactly Hermitian complex") {
  Mat m(2, 2);
  m << 0, cplx(0, 1), cplx(0, -1), 0;
  const auto h = validate_hermitian(m, 1e-10);
  CHECK(h.herm_residual() == 0.0);
  CHECK(h.mat() == m);
}

TEST_CASE("validate_hermitian rejects non-Hermitian and non-square") {
  Mat m(2, 2);
  m << 0, 1, 0, 0;
  try {
    validate_hermitian(m, 1e-10);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
  try {
    validate_hermitian(Mat::Zero(2, 3), 1e-10);
    FAIL("expected NotSquare");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSquare);
  }
}

TEST_CASE("symmetrization is idempotent") {
  std::mt19937_64 rng(5);
  Mat m = oracle::random_hermitian(5, rng);
  m(0, 1) += 1e-12;
  const auto h1 = validate_hermitian(m, 1e-10);
  const auto h2 = validate_hermitian(h1.mat(), 1e-10);
  CHECK(h1.mat() == h2.mat());
  CHECK(h2.herm_residual() == 0.0);
}

TEST_CASE("inertia of small examples") {
  CHECK(inertia(oracle::diag_of({1, -1}), 1e-10) == Inertia{1, 0, 1});
  CHECK(inertia(oracle::diag_of({2, 3, 0}), 1e-10) == Inertia{2, 1, 0});
  Mat F(2, 2);
  F << 0, 1, 1, 0;
  CHECK(inertia(F, 1e-10) == Inertia{1, 0, 1});
  CHECK(inertia(Mat::Zero(3, 3), 1e-10) == Inertia{0, 3, 0});
}

TEST_CASE("Sylvester law under random congruence") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    std::vector<double> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[i] = static_cast<double>(static_cast<int>(i % 3) - 1);
    const MatrixPair p = pair_of(oracle::random_hermitian(n, rng), oracle::diag_of(d));
    const Congruence c = random_congruence(p, seed, 10.0);
    const Inertia before = inertia(p.B, 1e-10);
    const Inertia after = inertia(c.pair.B, 1e-10);
    CHECK(before == after);
    CHECK(after.n() == n);
    const Eigen::JacobiSVD<Mat> svd(c.Y);
    const auto& sv = svd.singularValues();
    CHECK(sv(0) / sv(sv.size() - 1) <= 10.0 * (1 + 1e-9));
  }
}

TEST_CASE("random_congruence is deterministic and preserves the typed spectrum") {
  const MatrixPair p = pair_of(oracle::diag_of({1, 2}), oracle::diag_of({1, -1}));
  const Congruence a = random_congruence(p, 7, 10.0);
  const Congruence b = random_congruence(p, 7, 10.0);
  CHECK(a.Y == b.Y);
  const TypedSpectrum s = typed_spectrum(a.pair, ToleranceSet{});
  REQUIRE(s.pos.size() == 1);
  REQUIRE(s.neg.size() == 1);
  CHECK(s.pos[0].value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s.neg[0].value == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("Haar unitary is unitary") {
  Rng rng(3);
  const Mat U = haar_unitary(6, rng);
  CHECK((U.adjoint() * U - Mat::Identity(6, 6)).norm() < 1e-12);
}
