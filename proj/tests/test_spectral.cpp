#include "oracle.hpp"
#include "tracemin/genpairs.hpp"
#include "tracemin/spectral.hpp"

#include <doctest.h>

using namespace tracemin;

namespace {
Mat F2() {
  Mat F(2, 2);
  F << 0, 1, 1, 0;
  return F;
}
}  // namespace

TEST_CASE("eigh small examples") {
  const EighResult a = eigh(oracle::diag_of({3, 1}));
  CHECK(a.values(0) == doctest::Approx(1.0));
  CHECK(a.values(1) == doctest::Approx(3.0));
  const EighResult b = eigh(F2());
  CHECK(b.values(0) == doctest::Approx(-1.0));
  CHECK(b.values(1) == doctest::Approx(1.0));
  const EighResult c = eigh(Mat(Mat::Identity(3, 3)));
  CHECK((c.vectors.adjoint() * c.vectors - Mat::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("eigh reconstruction and oracle agreement") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 32;
    const Mat H = oracle::random_hermitian(n, rng);
    const EighResult e = eigh(H);
    const double nh = spectral_norm(H);
    CHECK((H - e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint()).norm() <=
          1e-9 * (1 + nh));
    for (int i = 1; i < n; ++i) CHECK(e.values(i) >= e.values(i - 1));
    if (n <= 12) {
      const auto ref = oracle::hermitian_eigenvalues(H);
      for (int i = 0; i < n; ++i) CHECK(std::abs(e.values(i) - ref[i]) <= 1e-9 * (1 + nh));
    }
  }
}

TEST_CASE("deflation of common nullspace") {
  const auto d1 = deflate_common_nullspace(pair_of(oracle::diag_of({1, 0}), oracle::diag_of({1, 0})), 1e-10);
  CHECK(d1.deflated_dims == 1);
  CHECK(d1.reduced.n() == 1);
  const auto d2 = deflate_common_nullspace(pair_of(oracle::diag_of({1, 0}), oracle::diag_of({0, 1})), 1e-10);
  CHECK(d2.deflated_dims == 0);
  CHECK(d2.reduced.n() == 2);
  const MatrixPair p = pair_of(oracle::diag_of({1, 0, 0}), oracle::diag_of({1, -1, 0}));
  const auto d3 = deflate_common_nullspace(random_congruence(p, 4, 10.0).pair, 1e-10);
  CHECK(d3.deflated_dims == 1);
}

TEST_CASE("typed spectrum of diagonal pair") {
  const TypedSpectrum s = typed_spectrum(pair_of(oracle::diag_of({1, 2}), oracle::diag_of({1, -1})), {});
  REQUIRE(s.pos.size() == 1);
  REQUIRE(s.neg.size() == 1);
  CHECK(s.pos[0].value == doctest::Approx(1.0));
  CHECK(s.neg[0].value == doctest::Approx(-2.0));
  CHECK(s.pos[0].b_form > 0);
  CHECK(s.neg[0].b_form < 0);
}

TEST_CASE("Jordan block gives two copies") {
  Mat K(2, 2);
  K << 0, 0.3, 0.3, 1;
  const TypedSpectrum s = typed_spectrum(pair_of(K, F2()), {});
  REQUIRE(s.pos.size() == 1);
  REQUIRE(s.neg.size() == 1);
  CHECK(s.pos[0].value == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(s.neg[0].value == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(s.pos[0].jordan_pair);
  CHECK(s.neg[0].jordan_pair);
}

TEST_CASE("typed spectrum of the reference hat pair") {
  const ProblemInstance pb = oracle::golden_problem();
  const TypedSpectrum s = typed_spectrum(pb.hat_pair, {});
  REQUIRE(s.pos.size() == 1);
  REQUIRE(s.neg.size() == 1);
  CHECK(std::abs(s.pos[0].value - std::sqrt(2.0) / 2) < 1e-10);
  CHECK(std::abs(s.neg[0].value + std::sqrt(2.0) / 4) < 1e-10);
}

TEST_CASE("congruent diagonalization") {
  const auto cd = congruent_diagonalize(pair_of(oracle::diag_of({1, 2}), oracle::diag_of({1, -1})), {});
  CHECK(cd.J(0) == 1.0);
  CHECK(cd.J(1) == -1.0);
  CHECK(cd.residual_A < 1e-12);
  CHECK(cd.residual_B < 1e-12);

  const ProblemInstance pb = oracle::golden_problem();
  const auto h = congruent_diagonalize(pb.hat_pair, {});
  CHECK(h.J(0) == 1.0);
  CHECK(h.J(1) == -1.0);
  const Mat Jm = h.J.cast<cplx>().asDiagonal();
  const Mat Lm = h.Lambda.cast<cplx>().asDiagonal();
  CHECK((h.Y.adjoint() * Jm * h.Y - pb.hat_pair.B.mat()).norm() < 1e-10);
  CHECK((h.Y.adjoint() * Lm * h.Y - pb.hat_pair.A.mat()).norm() < 1e-10);
  // Lambda = J * typed value.
  CHECK(std::abs(h.Lambda(0) - std::sqrt(2.0) / 2) < 1e-10);
  CHECK(std::abs(h.Lambda(1) - std::sqrt(2.0) / 4) < 1e-10);

  Mat K(2, 2);
  K << 0, 0, 0, 1;
  try {
    congruent_diagonalize(pair_of(K, F2()), {});
    FAIL("expected NotDiagonalizable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDiagonalizable);
  }
}

TEST_CASE("type counts match inertia for semidefinite assemblies") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    // Positive type at or above 0.5, negative type at or below 0.5: PSD.
    std::vector<BlockSpec> specs;
    const int np = 1 + trial % 3, nm = 1 + (trial / 3) % 3;
    for (int i = 0; i < np; ++i) specs.push_back(BlockSpec::Tr(1, 0.5 + std::abs(u(rng)), 1));
    for (int i = 0; i < nm; ++i) specs.push_back(BlockSpec::Tr(1, 0.5 - std::abs(u(rng)), -1));
    const Assembly as = assemble(specs, 100 + trial, 10.0);
    const TypedSpectrum s = typed_spectrum(as.pair, {});
    CHECK(static_cast<int>(s.pos.size()) == np);
    CHECK(static_cast<int>(s.neg.size()) == nm);
    REQUIRE(s.pos.size() == as.truth.pos.size());
    for (size_t i = 0; i < s.pos.size(); ++i) CHECK(std::abs(s.pos[i].value - as.truth.pos[i]) < 1e-7);
    REQUIRE(s.neg.size() == as.truth.neg.size());
    for (size_t i = 0; i < s.neg.size(); ++i) CHECK(std::abs(s.neg[i].value - as.truth.neg[i]) < 1e-7);
    CHECK(s.pos.front().value >= s.neg.back().value - 1e-7);
  }
}

TEST_CASE("mirrored exchanges types") {
  const TypedSpectrum s = typed_spectrum(pair_of(oracle::diag_of({1, 2}), oracle::diag_of({1, -1})), {});
  const TypedSpectrum m = mirrored(s);
  REQUIRE(m.pos.size() == 1);
  CHECK(m.pos[0].value == doctest::Approx(-2.0));
  CHECK(m.neg[0].value == doctest::Approx(1.0));
}
