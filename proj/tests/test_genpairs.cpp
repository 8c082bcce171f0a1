#include "corpora.hpp"
#include "tracemin/definiteness.hpp"
#include "tracemin/genpairs.hpp"
#include "tracemin/spectral.hpp"

#include <doctest.h>

using namespace tracemin;

TEST_CASE("block examples") {
  const MatrixPair r = block(BlockSpec::Tr(1, 3.0, 1));
  CHECK(r.A.mat()(0, 0) == cplx(3.0));
  CHECK(r.B.mat()(0, 0) == cplx(1.0));

  const MatrixPair c = block(BlockSpec::Tc(1, 0.0, 1.0));
  CHECK(c.A.mat()(0, 1) == cplx(0, 1));
  CHECK(c.A.mat()(1, 0) == cplx(0, -1));
  CHECK(c.B.mat()(0, 1) == cplx(1));
  CHECK(c.B.mat()(0, 0) == cplx(0));

  const MatrixPair i = block(BlockSpec::Tinf(1, 1));
  CHECK(i.A.mat()(0, 0) == cplx(1));
  CHECK(i.B.mat()(0, 0) == cplx(0));

  CHECK(block(BlockSpec::Ts(2)).n() == 5);
  CHECK(block(BlockSpec::Tc(2, 1, 1)).n() == 4);
  CHECK((k_template(3, 2.0) - (Mat(3, 3) << 0, 0, 2, 0, 2, 1, 2, 1, 0).finished()).norm() == 0.0);
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(block(BlockSpec::Tc(1, 0.0, -1.0)), Error);
  CHECK_THROWS_AS(block(BlockSpec::Tr(0, 0.0, 1)), Error);
  CHECK_THROWS_AS(block(BlockSpec::Tr(1, 0.0, 2)), Error);
  CHECK_THROWS_AS(direct_sum({}), Error);
}

TEST_CASE("Tc congruent diagonal form") {
  const BlockSpec s = BlockSpec::Tc(2, 0.5, 1.5);
  const MatrixPair a = block(s);
  const MatrixPair b = block_tc_diagonal_b(s);
  CHECK(inertia(a.B, 1e-10) == inertia(b.B, 1e-10));
  // Same pencil eigenvalues: both have alpha +- i beta with multiplicity p.
  const Mat Ma = a.B.mat().inverse() * a.A.mat();
  const Mat Mb = b.B.mat().inverse() * b.A.mat();
  Eigen::ComplexEigenSolver<Mat> ea(Ma), eb(Mb);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(std::abs(ea.eigenvalues()(k).imag()) - 1.5) < 1e-6);
    CHECK(std::abs(std::abs(eb.eigenvalues()(k).imag()) - 1.5) < 1e-6);
  }
}

TEST_CASE("assemble examples") {
  const Assembly a = assemble({BlockSpec::Tr(1, 1, 1), BlockSpec::Tr(1, -2, -1)}, 3, 10.0);
  REQUIRE(a.truth.pos.size() == 1);
  CHECK(a.truth.pos[0] == 1.0);
  CHECK(a.truth.neg[0] == -2.0);
  CHECK(a.truth.psd);
  CHECK(a.truth.diagonalizable);
  const MatrixPair d = direct_sum({BlockSpec::Tr(1, 1, 1), BlockSpec::Tr(1, -2, -1)});
  CHECK((d.A.mat() - oracle::diag_of({1, 2})).norm() == 0.0);
  CHECK((a.Y.adjoint() * d.A.mat() * a.Y - a.pair.A.mat()).norm() < 1e-10);

  const Assembly j = assemble({BlockSpec::Tr(2, 0.4, 1)}, 3, 10.0);
  CHECK(j.truth.psd);
  CHECK_FALSE(j.truth.nsd);
  CHECK_FALSE(j.truth.diagonalizable);

  const Assembly c = assemble({BlockSpec::Tc(1, 0, 1)}, 3, 10.0);
  CHECK_FALSE(c.truth.psd);
  CHECK_FALSE(c.truth.nsd);
}

TEST_CASE("analyzer agreement on random assemblies") {
  std::mt19937_64 rng(81);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto specs = corpora::random_specs(10, rng, false);
    const Assembly as = assemble(specs, 7000 + trial, 10.0);
    const GroundTruth& t = as.truth;
    CHECK(inertia(as.pair.B, 1e-10) == t.inertia_B);
    const auto rep = definiteness_interval(as.pair, {});
    CHECK(rep.is_psd_pair == t.psd);
    CHECK(rep.is_nsd_pair == t.nsd);
    const PencilAnalysis an = analyze_pencil(as.pair, {});
    CHECK(an.spectrum.deflated_dims == t.deflated_dims);
    if (!t.typed_values_defined || an.spectrum.infinite_definite_sign == InfiniteSign::Coupled) continue;
    CHECK(an.spectrum.nonreal_count == t.complex_count);
    REQUIRE(an.spectrum.pos.size() == t.pos.size());
    REQUIRE(an.spectrum.neg.size() == t.neg.size());
    for (size_t i = 0; i < t.pos.size(); ++i) CHECK(std::abs(an.spectrum.pos[i].value - t.pos[i]) < 1e-7);
    for (size_t i = 0; i < t.neg.size(); ++i) CHECK(std::abs(an.spectrum.neg[i].value - t.neg[i]) < 1e-7);
    CHECK(an.diagonalizable == (t.diagonalizable && t.complex_count == 0));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("inertia additivity") {
  const std::vector<BlockSpec> specs = {BlockSpec::Tr(3, 1, -1), BlockSpec::Tc(2, 0, 1), BlockSpec::Tinf(2, 1),
                                        BlockSpec::To(), BlockSpec::Ts(1)};
  Inertia sum;
  for (const auto& s : specs) {
    const Inertia i = inertia(block(s).B, 1e-10);
    sum.n_plus += i.n_plus;
    sum.n_zero += i.n_zero;
    sum.n_minus += i.n_minus;
  }
  CHECK(ground_truth(specs).inertia_B == sum);
  CHECK(inertia(assemble(specs, 1, 10.0).pair.B, 1e-10) == sum);
}
