#include "tracemin/hyperbolic.hpp"

#include "tracemin/spectral.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <vector>

namespace tracemin {

namespace {

Mat psd_sqrt(const Mat& P) {
  const EighResult e = eigh(herm_part(P));
  RVec s = e.values.cwiseMax(0.0).cwiseSqrt();
  return e.vectors * s.cast<cplx>().asDiagonal() * e.vectors.adjoint();
}

// Unitary polar factor of a square nonsingular matrix.
Mat unitary_factor(const Mat& X) {
  if (X.rows() == 0) return X;
  Eigen::JacobiSVD<Mat> svd(X, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

RVec SignatureJ::diag() const {
  RVec d(n());
  d.head(n_plus).setOnes();
  d.tail(n_minus).setConstant(-1.0);
  return d;
}

Mat SignatureJ::mat() const { return diag().cast<cplx>().asDiagonal(); }

Mat polar_from_W(const Mat& W, const Mat& V_plus, const Mat& V_minus) {
  const Eigen::Index np = W.rows(), nm = W.cols();
  if (V_plus.rows() != np || V_minus.rows() != nm) {
    throw Error(ErrorKind::InvalidInput, "polar factor dimensions disagree");
  }
  Mat X(np + nm, np + nm);
  X.topLeftCorner(np, np) = psd_sqrt(Mat::Identity(np, np) + W * W.adjoint()) * V_plus;
  X.topRightCorner(np, nm) = W * V_minus;
  X.bottomLeftCorner(nm, np) = W.adjoint() * V_plus;
  X.bottomRightCorner(nm, nm) = psd_sqrt(Mat::Identity(nm, nm) + W.adjoint() * W) * V_minus;
  return X;
}

Mat ChShFactors::reassemble() const {
  const Eigen::Index np = U_plus.rows(), nm = U_minus.rows();
  const Eigen::Index k = sigma.size();
  Mat core = Mat::Identity(np + nm, np + nm);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double s = sigma(i), c = std::sqrt(1.0 + s * s);
    core(i, i) = c;
    core(np + i, np + i) = c;
    core(i, np + i) = s;
    core(np + i, i) = s;
  }
  Mat L = Mat::Zero(np + nm, np + nm), R = Mat::Zero(np + nm, np + nm);
  L.topLeftCorner(np, np) = U_plus;
  L.bottomRightCorner(nm, nm) = U_minus;
  R.topLeftCorner(np, np) = V_plus;
  R.bottomRightCorner(nm, nm) = V_minus;
  return L * core * R;
}

ChShFactors chsh_decompose(const Mat& X, const SignatureJ& J, double tol) {
  const int np = J.n_plus, nm = J.n_minus;
  if (X.rows() != J.n() || X.cols() != J.n()) {
    throw Error(ErrorKind::InvalidInput, "matrix order does not match signature");
  }
  const Mat Jm = J.mat();
  const double res = (X.adjoint() * Jm * X - Jm).norm();
  if (!(res <= tol)) {
    throw Error(ErrorKind::NotJUnitary, "J-unitarity residual exceeds tolerance");
  }
  const Mat X11 = X.topLeftCorner(np, np);
  const Mat X22 = X.bottomRightCorner(nm, nm);
  const Mat X12 = X.topRightCorner(np, nm);
  // X11 = (I+WW^H)^{1/2} V+ is nonsingular; its unitary polar factor is V+.
  const Mat Vp = unitary_factor(X11);
  const Mat Vm = unitary_factor(X22);
  const Mat W = X12 * Vm.adjoint();

  ChShFactors f;
  const int k = std::min(np, nm);
  if (k == 0) {
    f.U_plus = Mat::Identity(np, np);
    f.U_minus = Mat::Identity(nm, nm);
    f.V_plus = Vp;
    f.V_minus = Vm;
    f.sigma = RVec(0);
    return f;
  }
  Eigen::JacobiSVD<Mat> svd(W, Eigen::ComputeFullU | Eigen::ComputeFullV);
  f.sigma = svd.singularValues().head(k);
  f.U_plus = svd.matrixU();
  f.U_minus = svd.matrixV();
  // X = diag(U+,U-) core diag(U+^H V+, U-^H V-).
  f.V_plus = f.U_plus.adjoint() * Vp;
  f.V_minus = f.U_minus.adjoint() * Vm;
  return f;
}

Mat sample_j_unitary(const SignatureJ& J, double spread, Rng& rng) {
  if (spread < 0.0) throw Error(ErrorKind::InvalidInput, "spread must be nonnegative");
  const Mat W = gaussian_matrix(J.n_plus, J.n_minus, rng) * spread;
  const Mat Vp = haar_unitary(J.n_plus, rng);
  const Mat Vm = haar_unitary(J.n_minus, rng);
  return polar_from_W(W, Vp, Vm);
}

Mat sample_feasible(const SignatureJ& J, const SignatureJ& Jhat, double spread, Rng& rng) {
  if (Jhat.n_plus > J.n_plus || Jhat.n_minus > J.n_minus) {
    throw Error(ErrorKind::InertiaViolation, "hat signature exceeds pair signature");
  }
  const Mat G = sample_j_unitary(J, spread, rng);
  Mat X(J.n(), Jhat.n());
  X.leftCols(Jhat.n_plus) = G.leftCols(Jhat.n_plus);
  X.rightCols(Jhat.n_minus) = G.middleCols(J.n_plus, Jhat.n_minus);
  return X;
}

Mat complete_j_basis(const Mat& X_partial, const RVec& Jdiag, double tol) {
  const Eigen::Index n = Jdiag.size();
  const Eigen::Index k = X_partial.cols();
  const Mat Jm = Jdiag.cast<cplx>().asDiagonal();
  if (k == 0) return Mat::Identity(n, n);
  if (X_partial.rows() != n || k > n) {
    throw Error(ErrorKind::InvalidInput, "partial basis has wrong shape");
  }
  const Mat G = X_partial.adjoint() * Jm * X_partial;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (std::abs(G(i, i)) < tol) {
      throw Error(ErrorKind::DegenerateInput, "J-neutral column cannot be completed");
    }
  }
  Eigen::JacobiSVD<Mat> svd(X_partial.adjoint() * Jm, Eigen::ComputeFullV);
  const Mat C = svd.matrixV().rightCols(n - k);
  const EighResult eg = eigh(herm_part(C.adjoint() * Jm * C));
  Mat out(n, n);
  out.leftCols(k) = X_partial;
  std::vector<Vec> pos, neg;
  for (Eigen::Index i = eg.values.size() - 1; i >= 0; --i) {
    const double g = eg.values(i);
    if (std::abs(g) < tol) {
      throw Error(ErrorKind::DegenerateInput, "complement is J-degenerate");
    }
    const Vec u = C * eg.vectors.col(i) / std::sqrt(std::abs(g));
    (g > 0 ? pos : neg).push_back(u);
  }
  Eigen::Index c = k;
  for (const Vec& u : pos) out.col(c++) = u;
  for (const Vec& u : neg) out.col(c++) = u;
  return out;
}

FeasibleFrame feasible_frame(const Mat& B, const Mat& Bhat, double rank_tol) {
  FeasibleFrame fr;
  const EighResult eb = eigh(herm_part(B));
  const EighResult eh = eigh(herm_part(Bhat));
  const double sb = std::max(eb.values.cwiseAbs().maxCoeff(), 1e-300);
  const double sh = eh.values.size() ? eh.values.cwiseAbs().maxCoeff() : 0.0;
  std::vector<int> bp, bm, bz, hp, hm;
  for (Eigen::Index i = eb.values.size() - 1; i >= 0; --i) {
    const double v = eb.values(i);
    if (v > rank_tol * sb) bp.push_back(static_cast<int>(i));
  }
  for (Eigen::Index i = 0; i < eb.values.size(); ++i) {
    const double v = eb.values(i);
    if (v < -rank_tol * sb) bm.push_back(static_cast<int>(i));
    else if (std::abs(v) <= rank_tol * sb) bz.push_back(static_cast<int>(i));
  }
  for (Eigen::Index i = 0; i < eh.values.size(); ++i) {
    const double v = eh.values(i);
    if (sh == 0.0 || std::abs(v) <= rank_tol * sh) {
      throw Error(ErrorKind::EmptyFeasibleSet, "Bhat is singular");
    }
    (v > 0 ? hp : hm).push_back(static_cast<int>(i));
  }
  if (hp.size() > bp.size() || hm.size() > bm.size()) {
    throw Error(ErrorKind::EmptyFeasibleSet, "inertia of Bhat exceeds inertia of B");
  }
  const Eigen::Index n = B.rows(), nh = Bhat.rows();
  fr.J = {static_cast<int>(bp.size()), static_cast<int>(bm.size())};
  fr.Jhat = {static_cast<int>(hp.size()), static_cast<int>(hm.size())};
  fr.F = Mat(n, fr.J.n());
  Eigen::Index c = 0;
  for (int i : bp) fr.F.col(c++) = eb.vectors.col(i) / std::sqrt(eb.values(i));
  for (int i : bm) fr.F.col(c++) = eb.vectors.col(i) / std::sqrt(-eb.values(i));
  fr.N = Mat(n, static_cast<Eigen::Index>(bz.size()));
  for (size_t k = 0; k < bz.size(); ++k) fr.N.col(k) = eb.vectors.col(bz[k]);
  // Bhat = U D U^H, Bhat^{-1} = U |D|^{-1/2} Jhat |D|^{-1/2} U^H.
  fr.M = Mat(nh, nh);
  c = 0;
  for (int i : hp) fr.M.row(c++) = eh.vectors.col(i).adjoint() / std::sqrt(eh.values(i));
  for (int i : hm) fr.M.row(c++) = eh.vectors.col(i).adjoint() / std::sqrt(-eh.values(i));
  return fr;
}

Mat sample_original(const FeasibleFrame& fr, double spread, double null_spread, Rng& rng) {
  const Mat G = sample_feasible(fr.J, fr.Jhat, spread, rng);
  Mat X = fr.F * G * fr.M;
  if (fr.N.cols() > 0 && null_spread > 0.0) {
    X += fr.N * gaussian_matrix(static_cast<int>(fr.N.cols()), fr.Jhat.n(), rng) * null_spread;
  }
  return X;
}

}  // namespace tracemin
