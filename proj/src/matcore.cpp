#include "tracemin/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>

namespace tracemin {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::KernelFailure: return "KernelFailure";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::InertiaViolation: return "InertiaViolation";
    case ErrorKind::EmptyFeasibleSet: return "EmptyFeasibleSet";
    case ErrorKind::NotAttainable: return "NotAttainable";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotJUnitary: return "NotJUnitary";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NoWitnessConstructible: return "NoWitnessConstructible";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

Mat herm_part(const Mat& m) { return (m + m.adjoint()) * 0.5; }

HermitianMatrix HermitianMatrix::from_trusted(const Mat& m) {
  HermitianMatrix h;
  h.m_ = herm_part(m);
  return h;
}

HermitianMatrix validate_hermitian(const Mat& raw, double herm_tol) {
  if (raw.rows() != raw.cols()) {
    throw Error(ErrorKind::NotSquare, "matrix is not square");
  }
  if (raw.rows() < 1) {
    throw Error(ErrorKind::InvalidInput, "matrix dimension must be at least 1");
  }
  double res = 0.0;
  for (Eigen::Index i = 0; i < raw.rows(); ++i) {
    for (Eigen::Index j = 0; j < raw.cols(); ++j) {
      res = std::max(res, std::abs(raw(i, j) - std::conj(raw(j, i))));
    }
  }
  if (!(res <= herm_tol)) {
    throw Error(ErrorKind::NotHermitian,
                "Hermiticity residual " + std::to_string(res) + " exceeds tolerance");
  }
  HermitianMatrix h;
  h.m_ = herm_part(raw);
  h.residual_ = res;
  return h;
}

Inertia inertia(const Mat& M, double rank_tol) {
  Inertia in;
  if (M.rows() == 0) return in;
  Eigen::SelfAdjointEigenSolver<Mat> es(M, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::KernelFailure, "eigenvalue kernel failed");
  }
  const RVec& ev = es.eigenvalues();
  double scale = ev.cwiseAbs().maxCoeff();
  if (scale == 0.0) scale = 1.0;
  const double thr = rank_tol * scale;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > thr) {
      ++in.n_plus;
    } else if (ev(i) < -thr) {
      ++in.n_minus;
    } else {
      ++in.n_zero;
    }
  }
  return in;
}

Inertia inertia(const HermitianMatrix& M, double rank_tol) {
  return inertia(M.mat(), rank_tol);
}

MatrixPair::MatrixPair(HermitianMatrix a, HermitianMatrix b)
    : A(std::move(a)), B(std::move(b)) {
  if (A.n() != B.n()) {
    throw Error(ErrorKind::InvalidInput, "pair dimensions disagree");
  }
}

ProblemInstance::ProblemInstance(MatrixPair p, MatrixPair hp, ToleranceSet tols)
    : pair(std::move(p)), hat_pair(std::move(hp)), tolerances(tols) {
  if (hat_pair.n() > pair.n()) {
    throw Error(ErrorKind::InvalidInput, "hat order exceeds pair order");
  }
}

MatrixPair pair_of(const Mat& A, const Mat& B) {
  return MatrixPair(HermitianMatrix::from_trusted(A), HermitianMatrix::from_trusted(B));
}

double spectral_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

Mat gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      g(i, j) = cplx(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

Mat haar_unitary(int n, Rng& rng) {
  if (n == 0) return Mat(0, 0);
  Mat g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(n, n);
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const cplx d = r(i, i);
    const double a = std::abs(d);
    const cplx ph = a > 0.0 ? d / a : cplx(1.0, 0.0);
    q.col(i) *= ph;
  }
  return q;
}

Congruence random_congruence(const MatrixPair& pair, std::uint64_t seed,
                             double conditioning_cap) {
  if (!(conditioning_cap > 1.0)) {
    throw Error(ErrorKind::InvalidInput, "conditioning cap must exceed 1");
  }
  const int n = pair.n();
  Rng rng(seed);
  Mat U = haar_unitary(n, rng);
  const double half_log = 0.5 * std::log(conditioning_cap);
  std::uniform_real_distribution<double> ud(-half_log, half_log);
  Mat Y(n, n);
  for (int j = 0; j < n; ++j) Y.col(j) = U.col(j) * std::exp(ud(rng));
  Congruence c;
  c.Y = Y;
  c.pair = pair_of(Y.adjoint() * pair.A.mat() * Y, Y.adjoint() * pair.B.mat() * Y);
  return c;
}

}  // namespace tracemin
