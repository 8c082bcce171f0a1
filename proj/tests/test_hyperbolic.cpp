#include "oracle.hpp"
#include "tracemin/hyperbolic.hpp"

#include <doctest.h>

using namespace tracemin;

namespace {
double j_residual(const Mat& X, const Mat& J, const Mat& Jh) {
  return (X.adjoint() * J * X - Jh).norm();
}
}  // namespace

TEST_CASE("polar_from_W examples") {
  const Mat I1 = Mat::Identity(1, 1);
  CHECK((polar_from_W(Mat::Zero(1, 1), I1, I1) - Mat::Identity(2, 2)).norm() == 0.0);
  const double s = 0.7;
  Mat W(1, 1);
  W << s;
  const Mat X = polar_from_W(W, I1, I1);
  CHECK(std::abs(X(0, 0) - std::sqrt(1 + s * s)) < 1e-15);
  CHECK(std::abs(X(0, 1) - s) < 1e-15);
  CHECK(j_residual(X, SignatureJ{1, 1}.mat(), SignatureJ{1, 1}.mat()) < 1e-14);

  Rng rng(9);
  const Mat Wr = gaussian_matrix(3, 2, rng);
  const Mat Xr = polar_from_W(Wr, haar_unitary(3, rng), haar_unitary(2, rng));
  CHECK(j_residual(Xr, SignatureJ{3, 2}.mat(), SignatureJ{3, 2}.mat()) <= 1e-10 * 5);
}

TEST_CASE("chsh_decompose") {
  const SignatureJ J{3, 2};
  const ChShFactors f0 = chsh_decompose(Mat::Identity(5, 5), J, 1e-10);
  CHECK(f0.sigma.norm() < 1e-14);
  CHECK((f0.reassemble() - Mat::Identity(5, 5)).norm() < 1e-12);

  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat W = gaussian_matrix(3, 2, rng);
    const Mat X = polar_from_W(W, Mat::Identity(3, 3), Mat::Identity(2, 2));
    const ChShFactors f = chsh_decompose(X, J, 1e-8);
    const RVec sv = Eigen::JacobiSVD<Mat>(W).singularValues();
    CHECK((f.sigma - sv).norm() < 1e-9);
    for (int i = 1; i < f.sigma.size(); ++i) CHECK(f.sigma(i) <= f.sigma(i - 1));

    const Mat Y = polar_from_W(W, haar_unitary(3, rng), haar_unitary(2, rng));
    const ChShFactors g = chsh_decompose(Y, J, 1e-8);
    CHECK((g.reassemble() - Y).norm() <= 1e-8 * (1 + Y.norm()));
    CHECK(j_residual(g.reassemble(), J.mat(), J.mat()) < 1e-9);
  }
  try {
    chsh_decompose(2.0 * Mat::Identity(5, 5), J, 1e-8);
    FAIL("expected NotJUnitary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotJUnitary);
  }
}

TEST_CASE("sample_j_unitary") {
  const SignatureJ J{2, 3};
  Rng r0(1);
  const Mat X0 = sample_j_unitary(J, 0.0, r0);
  CHECK(j_residual(X0, J.mat(), J.mat()) < 1e-12);
  CHECK(X0.topRightCorner(2, 3).norm() < 1e-14);
  Rng r1(42);
  const Mat X1 = sample_j_unitary(J, 1.0, r1);
  CHECK(j_residual(X1, J.mat(), J.mat()) <= 1e-9);
  Rng a(42), b(42);
  CHECK(sample_j_unitary(J, 1.0, a) == sample_j_unitary(J, 1.0, b));
  // Group property.
  Rng c(5);
  const Mat P = sample_j_unitary(J, 1.0, c) * sample_j_unitary(J, 1.0, c);
  CHECK(j_residual(P, J.mat(), J.mat()) <= 1e-8);
}

TEST_CASE("sample_feasible") {
  Rng rng(7);
  const Mat X = sample_feasible({1, 1}, {1, 1}, 1.0, rng);
  CHECK(j_residual(X, SignatureJ{1, 1}.mat(), SignatureJ{1, 1}.mat()) <= 1e-9);
  const Mat Y = sample_feasible({1, 1}, {1, 0}, 1.0, rng);
  CHECK(Y.cols() == 1);
  CHECK(j_residual(Y, SignatureJ{1, 1}.mat(), SignatureJ{1, 0}.mat()) <= 1e-9);
  Rng r7(7);
  const Mat Z = sample_feasible({1, 2}, {1, 1}, 1.0, r7);
  CHECK(j_residual(Z, SignatureJ{1, 2}.mat(), SignatureJ{1, 1}.mat()) <= 1e-9);
  try {
    sample_feasible({1, 1}, {2, 0}, 1.0, rng);
    FAIL("expected InertiaViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InertiaViolation);
  }
}

TEST_CASE("complete_j_basis") {
  RVec J2(2);
  J2 << 1, -1;
  const Mat e1 = Mat::Identity(2, 1);
  const Mat C = complete_j_basis(e1, J2, 1e-10);
  CHECK(C.cols() == 2);
  CHECK(std::abs(std::abs(C(1, 1)) - 1.0) < 1e-12);

  const Mat E = complete_j_basis(Mat::Zero(2, 0), J2, 1e-10);
  const Mat G = E.adjoint() * J2.cast<cplx>().asDiagonal() * E;
  CHECK((G - Mat(J2.cast<cplx>().asDiagonal())).norm() < 1e-12);

  RVec J3(3);
  J3 << 1, 1, -1;
  const Mat D = complete_j_basis(Mat::Identity(3, 1), J3, 1e-10);
  const Mat G3 = D.adjoint() * J3.cast<cplx>().asDiagonal() * D;
  CHECK((G3 - Mat(J3.cast<cplx>().asDiagonal())).norm() < 1e-12);

  Mat iso(2, 1);
  iso << 1, 1;
  try {
    complete_j_basis(iso, J2, 1e-10);
    FAIL("expected DegenerateInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInput);
  }
}

TEST_CASE("trace sandwich bounds") {
  std::mt19937_64 rng(61);
  Rng r(61);
  for (int trial = 0; trial < 50; ++trial) {
    const int np = 1 + trial % 4, nm = 1 + (trial / 4) % 4;
    const int n = np + nm;
    const Mat G = oracle::random_hermitian(n, rng);
    const Mat A0 = G * G;
    const Mat H = oracle::random_hermitian(n, rng);
    const Mat A1 = H * H;
    const Mat X = sample_j_unitary({np, nm}, 1.0, r);
    const RVec sv = Eigen::JacobiSVD<Mat>(X).singularValues();
    auto e0 = oracle::hermitian_eigenvalues(A0);
    auto e1 = oracle::hermitian_eigenvalues(A1);
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n; ++i) {
      lo += e0[n - 1 - i] * e1[i];
      hi += e0[n - 1 - i] * e1[n - 1 - i];
    }
    const double t = (A0 * X.adjoint() * A1 * X).trace().real();
    const double smin = sv(n - 1), smax = sv(0);
    CHECK(lo * smin * smin <= t * (1 + 1e-10) + 1e-10);
    CHECK(t <= hi * smax * smax * (1 + 1e-10) + 1e-10);
  }
}

TEST_CASE("feasible frame maps to the constraint") {
  std::mt19937_64 rng(71);
  Rng r(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat Y = oracle::random_hermitian(4, rng) + 5.0 * Mat::Identity(4, 4);
    const Mat B = Y.adjoint() * oracle::diag_of({1, -1, 1, 0}) * Y;
    const Mat Yh = oracle::random_hermitian(2, rng) + 3.0 * Mat::Identity(2, 2);
    const Mat Bh = Yh.adjoint() * oracle::diag_of({1, -1}) * Yh;
    const FeasibleFrame fr = feasible_frame(B, Bh, 1e-10);
    const Mat X = sample_original(fr, 2.0, 1.0, r);
    CHECK((Bh * X.adjoint() * B * X - Mat::Identity(2, 2)).norm() < 1e-8 * (1 + X.squaredNorm()));
  }
  CHECK_THROWS_AS(feasible_frame(oracle::diag_of({1, 1}), oracle::diag_of({1, -1}), 1e-10), Error);
}
