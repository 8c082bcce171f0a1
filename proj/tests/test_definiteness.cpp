#include "oracle.hpp"
#include "tracemin/definiteness.hpp"
#include "tracemin/genpairs.hpp"
#include "tracemin/spectral.hpp"

#include <doctest.h>

using namespace tracemin;

TEST_CASE("lambda_min_shift on a diagonal pair") {
  const MatrixPair p = pair_of(oracle::diag_of({1, 2}), oracle::diag_of({1, -1}));
  CHECK(lambda_min_shift(p, 0.0) == doctest::Approx(1.0));
  CHECK(lambda_min_shift(p, 1.0) == doctest::Approx(0.0));
  CHECK(lambda_min_shift(p, 2.0) == doctest::Approx(-1.0));
}

TEST_CASE("interval of a diagonal pair") {
  const auto r = definiteness_interval(pair_of(oracle::diag_of({1, 2}), oracle::diag_of({1, -1})), {});
  CHECK(r.is_psd_pair);
  CHECK_FALSE(r.is_nsd_pair);
  REQUIRE(r.psd_interval.has_value());
  CHECK(std::abs(r.psd_interval->first + 2.0) < 1e-6);
  CHECK(std::abs(r.psd_interval->second - 1.0) < 1e-6);
}

TEST_CASE("A equal to B is both PSD and NSD") {
  const auto r = definiteness_interval(pair_of(oracle::diag_of({1, -1}), oracle::diag_of({1, -1})), {});
  CHECK(r.is_psd_pair);
  CHECK(r.is_nsd_pair);
}

TEST_CASE("complex block is neither") {
  const auto r = definiteness_interval(block(BlockSpec::Tc(1, 0.0, 1.0)), {});
  CHECK_FALSE(r.is_psd_pair);
  CHECK_FALSE(r.is_nsd_pair);
}

TEST_CASE("negation duality") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Assembly as = assemble({BlockSpec::Tr(1, 1.0 + trial * 0.1, 1), BlockSpec::Tr(1, -1.0, -1),
                                  BlockSpec::Tr(1, trial % 2 ? 3.0 : -3.0, trial % 3 ? 1 : -1)},
                                 trial, 10.0);
    const auto r1 = definiteness_interval(as.pair, {});
    const auto r2 = definiteness_interval(pair_of(-as.pair.A.mat(), -as.pair.B.mat()), {});
    CHECK(r1.is_psd_pair == r2.is_nsd_pair);
    CHECK(r1.is_nsd_pair == r2.is_psd_pair);
  }
}

TEST_CASE("f is concave") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-5, 5), w(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6;
    const MatrixPair p = pair_of(oracle::random_hermitian(n, rng), oracle::random_hermitian(n, rng));
    const double scale = 1 + spectral_norm(p.A.mat()) + spectral_norm(p.B.mat());
    for (int k = 0; k < 10; ++k) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      const double t = w(rng);
      const double lhs = lambda_min_shift(p, t * a + (1 - t) * b);
      const double rhs = t * lambda_min_shift(p, a) + (1 - t) * lambda_min_shift(p, b);
      CHECK(lhs >= rhs - 1e-9 * scale);
    }
  }
}

TEST_CASE("interval endpoints match extreme typed eigenvalues") {
  for (int trial = 0; trial < 30; ++trial) {
    const double lp = 0.5 + trial * 0.05, lm = -1.0 - trial * 0.03;
    const Assembly as = assemble({BlockSpec::Tr(1, lp, 1), BlockSpec::Tr(1, lp + 2, 1),
                                  BlockSpec::Tr(1, lm, -1), BlockSpec::Tr(1, lm - 1, -1)},
                                 500 + trial, 10.0);
    const auto r = definiteness_interval(as.pair, {});
    REQUIRE(r.psd_interval.has_value());
    CHECK(std::abs(r.psd_interval->first - lm) <= 1e-6 * r.scale);
    CHECK(std::abs(r.psd_interval->second - lp) <= 1e-6 * r.scale);
  }
}

TEST_CASE("diagonal criterion agrees with the definiteness verdict") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int np = 1 + trial % 3, nm = 1 + (trial / 3) % 2;
    std::vector<double> lam, j;
    double minp = 1e300, maxn = -1e300;
    for (int i = 0; i < np; ++i) {
      const double v = u(rng);
      minp = std::min(minp, v);
      lam.push_back(v);
      j.push_back(1);
    }
    for (int i = 0; i < nm; ++i) {
      const double v = u(rng);
      maxn = std::max(maxn, v);
      lam.push_back(-v);  // Lambda = J * typed value
      j.push_back(-1);
    }
    const auto r = definiteness_interval(pair_of(oracle::diag_of(lam), oracle::diag_of(j)), {});
    CHECK(r.is_psd_pair == (minp >= maxn));
  }
}
