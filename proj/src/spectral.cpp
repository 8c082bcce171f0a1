#include "tracemin/spectral.hpp"

#include "tracemin/definiteness.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tracemin {

const char* to_string(InfiniteSign s) {
  switch (s) {
    case InfiniteSign::None: return "None";
    case InfiniteSign::Plus: return "Plus";
    case InfiniteSign::Minus: return "Minus";
    case InfiniteSign::Mixed: return "Mixed";
    case InfiniteSign::Coupled: return "Coupled";
  }
  return "None";
}

const char* to_string(SpectrumRoute r) {
  switch (r) {
    case SpectrumRoute::Empty: return "Empty";
    case SpectrumRoute::PositiveSemidefinite: return "PositiveSemidefinite";
    case SpectrumRoute::NegativeSemidefinite: return "NegativeSemidefinite";
    case SpectrumRoute::General: return "General";
    case SpectrumRoute::Skipped: return "Skipped";
  }
  return "Empty";
}

EighResult eigh(const Mat& H) {
  EighResult r;
  if (H.rows() == 0) return r;
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::KernelFailure, "eigendecomposition failed");
  }
  r.values = es.eigenvalues();
  r.vectors = es.eigenvectors();
  return r;
}

EighResult eigh(const HermitianMatrix& H) { return eigh(H.mat()); }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Columns of V spanning the numerical nullspace of M (relative threshold).
Mat null_space(const Mat& M, double rel_tol) {
  const Eigen::Index cols = M.cols();
  if (M.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
  const RVec& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * top && top > 0.0) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

Mat cols_of(const Mat& V, const std::vector<int>& idx) {
  Mat out(V.rows(), static_cast<Eigen::Index>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k) out.col(k) = V.col(idx[k]);
  return out;
}

struct RawEig {
  double value;
  int type;  // +1, -1
  Vec w;     // J-frame vector
  bool jordan;
};

struct FiniteResult {
  std::vector<RawEig> eigs;
  std::vector<std::pair<cplx, std::pair<Vec, Vec>>> complex_pairs;
  int nonreal = 0;
  int isotropic = 0;
  bool ok = true;
};

// Spectrum of (H, diag(J)) when H - s0 diag(J) >= 0.
FiniteResult psd_route(const Mat& H, const RVec& J, double s0, const ToleranceSet& tols) {
  FiniteResult fr;
  const Eigen::Index r = H.rows();
  const Mat Jm = J.cast<cplx>().asDiagonal();
  const Mat C = herm_part(H - s0 * Jm);
  const EighResult ec = eigh(C);
  const double normC = std::max(ec.values.cwiseAbs().maxCoeff(), 1.0);
  const double null_tol = 1e-11 * normC;

  std::vector<int> nul, rng;
  for (Eigen::Index i = 0; i < r; ++i) {
    if (ec.values(i) < -1e-9 * normC) {
      fr.ok = false;
      return fr;
    }
    (std::abs(ec.values(i)) <= null_tol ? nul : rng).push_back(static_cast<int>(i));
  }
  const Mat N = cols_of(ec.vectors, nul);
  Mat E = N;
  if (!nul.empty()) {
    const Mat Vr = cols_of(ec.vectors, rng);
    RVec inv_c(static_cast<Eigen::Index>(rng.size()));
    for (size_t k = 0; k < rng.size(); ++k) inv_c(k) = 1.0 / ec.values(rng[k]);
    const Mat Cpinv = Vr * inv_c.cast<cplx>().asDiagonal() * Vr.adjoint();
    const EighResult eg = eigh(herm_part(N.adjoint() * Jm * N));
    std::vector<Vec> chains;
    for (Eigen::Index i = 0; i < eg.values.size(); ++i) {
      const double g = eg.values(i);
      const Vec z = N * eg.vectors.col(i);
      if (std::abs(g) > tols.type_tol) {
        fr.eigs.push_back({s0, g > 0 ? 1 : -1, z / std::sqrt(std::abs(g)), false});
      } else {
        fr.eigs.push_back({s0, 1, z, true});
        fr.eigs.push_back({s0, -1, z, true});
        chains.push_back(Cpinv * (Jm * z));
      }
    }
    if (!chains.empty()) {
      E.conservativeResize(r, N.cols() + static_cast<Eigen::Index>(chains.size()));
      for (size_t k = 0; k < chains.size(); ++k) E.col(N.cols() + k) = chains[k];
    }
  }
  const Mat Qc = E.cols() == 0 ? Mat(Mat::Identity(r, r)) : null_space(E.adjoint() * Jm, 1e-12);
  if (Qc.cols() == 0) return fr;
  const Mat Cc = herm_part(Qc.adjoint() * C * Qc);
  const Mat Jc = herm_part(Qc.adjoint() * Jm * Qc);
  Eigen::LLT<Mat> llt(Cc);
  if (llt.info() != Eigen::Success) {
    fr.ok = false;
    return fr;
  }
  const Mat L = llt.matrixL();
  const Mat Linv = L.triangularView<Eigen::Lower>().solve(Mat::Identity(Cc.rows(), Cc.cols()));
  const EighResult em = eigh(herm_part(Linv * Jc * Linv.adjoint()));
  for (Eigen::Index i = 0; i < em.values.size(); ++i) {
    const double nu = em.values(i);
    if (nu == 0.0) {
      fr.ok = false;
      return fr;
    }
    const Vec w = Qc * (Linv.adjoint() * em.vectors.col(i));
    fr.eigs.push_back({s0 + 1.0 / nu, nu > 0 ? 1 : -1, w / std::sqrt(std::abs(nu)), false});
  }
  return fr;
}

// Spectrum of (H, diag(J)) without semidefiniteness.
FiniteResult general_route(const Mat& H, const RVec& J, const ToleranceSet& tols) {
  FiniteResult fr;
  const Eigen::Index r = H.rows();
  const Mat Jm = J.cast<cplx>().asDiagonal();
  Eigen::ComplexEigenSolver<Mat> ces(Jm * H);
  if (ces.info() != Eigen::Success) {
    throw Error(ErrorKind::KernelFailure, "complex eigensolver failed");
  }
  const Vec& mu = ces.eigenvalues();
  const Mat& V = ces.eigenvectors();

  struct RealEig {
    double value;
    Vec v;
  };
  std::vector<RealEig> reals;
  std::vector<int> upper, lower;
  for (Eigen::Index i = 0; i < r; ++i) {
    const double im_tol = tols.type_tol * (1.0 + std::abs(mu(i)));
    if (std::abs(mu(i).imag()) <= im_tol) {
      reals.push_back({mu(i).real(), V.col(i)});
    } else {
      ++fr.nonreal;
      (mu(i).imag() > 0 ? upper : lower).push_back(static_cast<int>(i));
    }
  }
  std::vector<bool> used(lower.size(), false);
  for (int iu : upper) {
    int best = -1;
    double bd = kInf;
    for (size_t k = 0; k < lower.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(mu(lower[k]) - std::conj(mu(iu)));
      if (d < bd) {
        bd = d;
        best = static_cast<int>(k);
      }
    }
    if (best < 0) continue;
    used[best] = true;
    const Vec x = V.col(iu);
    Vec y = V.col(lower[best]);
    const cplx c = (x.adjoint() * Jm * y)(0, 0);
    if (std::abs(c) <= tols.type_tol * x.norm() * y.norm()) continue;
    y /= c;
    fr.complex_pairs.push_back({mu(iu), {x, y}});
  }

  std::sort(reals.begin(), reals.end(),
            [](const RealEig& a, const RealEig& b) { return a.value < b.value; });
  size_t i = 0;
  while (i < reals.size()) {
    size_t j = i + 1;
    while (j < reals.size() &&
           std::abs(reals[j].value - reals[i].value) <= 1e-8 * (1.0 + std::abs(reals[i].value))) {
      ++j;
    }
    Mat Vg(r, static_cast<Eigen::Index>(j - i));
    double mean = 0.0;
    for (size_t k = i; k < j; ++k) {
      Vg.col(k - i) = reals[k].v.normalized();
      mean += reals[k].value;
    }
    mean /= static_cast<double>(j - i);
    // B-orthonormalize inside a cluster of equal eigenvalues.
    const EighResult eg = eigh(herm_part(Vg.adjoint() * Jm * Vg));
    const double gmax = std::max(eg.values.cwiseAbs().maxCoeff(), 1e-300);
    for (Eigen::Index k = 0; k < eg.values.size(); ++k) {
      const double g = eg.values(k);
      if (std::abs(g) <= tols.type_tol || std::abs(g) <= 1e-10 * gmax) {
        ++fr.isotropic;
        continue;
      }
      const Vec w = Vg * eg.vectors.col(k) / std::sqrt(std::abs(g));
      fr.eigs.push_back({j - i == 1 ? reals[i].value : mean, g > 0 ? 1 : -1, w, false});
    }
    i = j;
  }
  return fr;
}

}  // namespace

Deflation deflate_common_nullspace(const MatrixPair& pair, double rank_tol) {
  const Mat& A = pair.A.mat();
  const Mat& B = pair.B.mat();
  const Eigen::Index n = A.rows();
  Mat stacked(2 * n, n);
  stacked << A, B;
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  const RVec& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (top > 0.0 && sv(i) > rank_tol * top) ++rank;
  }
  Deflation d;
  d.keep = svd.matrixV().leftCols(rank);
  d.basis = svd.matrixV().rightCols(n - rank);
  d.deflated_dims = static_cast<int>(n - rank);
  d.reduced = pair_of(d.keep.adjoint() * A * d.keep, d.keep.adjoint() * B * d.keep);
  return d;
}

TypedSpectrum mirrored(const TypedSpectrum& s) {
  TypedSpectrum m = s;
  m.pos = s.neg;
  m.neg = s.pos;
  for (auto& e : m.pos) e.eig_type = EigType::Positive, e.b_form = -e.b_form;
  for (auto& e : m.neg) e.eig_type = EigType::Negative, e.b_form = -e.b_form;
  switch (s.infinite_definite_sign) {
    case InfiniteSign::Plus: m.infinite_definite_sign = InfiniteSign::Minus; break;
    case InfiniteSign::Minus: m.infinite_definite_sign = InfiniteSign::Plus; break;
    default: break;
  }
  if (s.route == SpectrumRoute::PositiveSemidefinite) {
    m.route = SpectrumRoute::NegativeSemidefinite;
  } else if (s.route == SpectrumRoute::NegativeSemidefinite) {
    m.route = SpectrumRoute::PositiveSemidefinite;
  }
  return m;
}

PencilAnalysis analyze_pencil(const MatrixPair& pair, const ToleranceSet& tols) {
  PencilAnalysis an;
  const Mat& A = pair.A.mat();
  const Mat& B = pair.B.mat();
  const Eigen::Index n = A.rows();

  const Deflation dfl = deflate_common_nullspace(pair, tols.rank_tol);
  an.deflated_basis = dfl.basis;
  an.spectrum.deflated_dims = dfl.deflated_dims;
  const Mat& K = dfl.keep;
  const Mat& Ar = dfl.reduced.A.mat();
  const Mat& Br = dfl.reduced.B.mat();
  const Eigen::Index m = K.cols();
  if (m == 0) {
    an.null_basis = Mat(n, 0);
    an.infinite_vectors = Mat(n, 0);
    return an;
  }

  const EighResult eb = eigh(Br);
  const double bscale = eb.values.cwiseAbs().maxCoeff();
  std::vector<int> rng_idx, nul_idx;
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool zero = bscale == 0.0 || std::abs(eb.values(i)) <= tols.rank_tol * bscale;
    (zero ? nul_idx : rng_idx).push_back(static_cast<int>(i));
  }
  const Mat R = cols_of(eb.vectors, rng_idx);
  const Mat Nn = cols_of(eb.vectors, nul_idx);
  const Eigen::Index r = R.cols();
  RVec d(r);
  for (Eigen::Index k = 0; k < r; ++k) d(k) = eb.values(rng_idx[k]);

  an.null_basis = K * Nn;
  Mat S = herm_part(R.adjoint() * Ar * R);
  Mat L = R;
  if (Nn.cols() > 0) {
    const Mat A22 = herm_part(Nn.adjoint() * Ar * Nn);
    const EighResult ea = eigh(A22);
    const double ascale = std::max(eb.values.size() ? Ar.cwiseAbs().maxCoeff() : 0.0, 1e-300);
    an.infinite_values = ea.values;
    an.infinite_vectors = K * (Nn * ea.vectors);
    bool coupled = false, any_pos = false, any_neg = false;
    for (Eigen::Index i = 0; i < ea.values.size(); ++i) {
      const double a = ea.values(i);
      if (std::abs(a) <= tols.rank_tol * ascale * static_cast<double>(m)) {
        coupled = true;
      } else if (a > 0) {
        any_pos = true;
      } else {
        any_neg = true;
      }
    }
    if (coupled) {
      an.spectrum.infinite_definite_sign = InfiniteSign::Coupled;
      an.spectrum.complete = false;
      an.spectrum.route = SpectrumRoute::Skipped;
      an.diagonalizable = false;
      return an;
    }
    an.spectrum.infinite_definite_sign =
        any_pos && any_neg ? InfiniteSign::Mixed : (any_pos ? InfiniteSign::Plus : InfiniteSign::Minus);
    // Schur complement onto range(B); eigenvectors lift through L.
    const Mat A12 = R.adjoint() * Ar * Nn;
    const Mat A22inv_A21 = A22.ldlt().solve(A12.adjoint());
    S = herm_part(S - A12 * A22inv_A21);
    L = R - Nn * A22inv_A21;
  } else {
    an.infinite_vectors = Mat(n, 0);
  }
  if (r == 0) return an;

  RVec s(r), J(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    s(k) = 1.0 / std::sqrt(std::abs(d(k)));
    J(k) = d(k) > 0 ? 1.0 : -1.0;
  }
  const Mat H = herm_part(s.cast<cplx>().asDiagonal() * S * s.cast<cplx>().asDiagonal());
  const Mat T = K * L * s.cast<cplx>().asDiagonal();
  const Mat Jm = J.cast<cplx>().asDiagonal();

  auto pick_shift = [&](const ShiftSearch& ss) {
    const double sc = ss.scale;
    if (std::isfinite(ss.lo) && std::isfinite(ss.hi)) {
      return ss.hi - ss.lo > 1e-8 * sc ? 0.5 * (ss.lo + ss.hi) : ss.argmax;
    }
    if (std::isfinite(ss.hi)) return ss.hi - sc;
    if (std::isfinite(ss.lo)) return ss.lo + sc;
    return ss.argmax;
  };

  FiniteResult fr;
  fr.ok = false;
  const ShiftSearch sp = psd_shift_search(H, Jm, tols);
  if (sp.found) {
    fr = psd_route(H, J, pick_shift(sp), tols);
    if (fr.ok) an.spectrum.route = SpectrumRoute::PositiveSemidefinite;
  }
  if (!fr.ok) {
    const ShiftSearch sn = psd_shift_search(-H, Jm, tols);
    if (sn.found) {
      fr = psd_route(-H, J, pick_shift(sn), tols);
      if (fr.ok) {
        for (auto& e : fr.eigs) e.value = -e.value;
        an.spectrum.route = SpectrumRoute::NegativeSemidefinite;
      }
    }
  }
  if (!fr.ok) {
    fr = general_route(H, J, tols);
    an.spectrum.route = SpectrumRoute::General;
  }
  an.spectrum.nonreal_count = fr.nonreal;
  an.spectrum.isotropic_count = fr.isotropic;

  struct Entry {
    TypedEigenvalue te;
    Vec x;
  };
  std::vector<Entry> pos, neg;
  for (const RawEig& e : fr.eigs) {
    Entry en;
    en.x = T * e.w;
    const Vec u = en.x.normalized();
    en.te.value = e.value;
    en.te.eig_type = e.type > 0 ? EigType::Positive : EigType::Negative;
    en.te.b_form = (u.adjoint() * B * u)(0, 0).real();
    en.te.jordan_pair = e.jordan;
    if (e.jordan) en.x = u;
    (e.type > 0 ? pos : neg).push_back(std::move(en));
  }
  auto by_value = [](const Entry& a, const Entry& b) { return a.te.value < b.te.value; };
  std::stable_sort(pos.begin(), pos.end(), by_value);
  std::stable_sort(neg.begin(), neg.end(), by_value);
  for (auto& e : pos) {
    an.spectrum.pos.push_back(e.te);
    an.pos_vectors.push_back(e.x);
    if (e.te.jordan_pair) an.diagonalizable = false;
  }
  for (auto& e : neg) {
    an.spectrum.neg.push_back(e.te);
    an.neg_vectors.push_back(e.x);
    if (e.te.jordan_pair) an.diagonalizable = false;
  }
  for (const auto& cp : fr.complex_pairs) {
    an.complex_pairs.push_back({cp.first, T * cp.second.first, T * cp.second.second});
  }
  if (fr.nonreal > 0 || fr.isotropic > 0) an.diagonalizable = false;
  return an;
}

TypedSpectrum typed_spectrum(const MatrixPair& pair, const ToleranceSet& tols) {
  return analyze_pencil(pair, tols).spectrum;
}

CongruentDiagonalization congruent_diagonalize(const MatrixPair& pair, const PencilAnalysis& an,
                                               const ToleranceSet& tols) {
  if (!an.diagonalizable) {
    throw Error(ErrorKind::NotDiagonalizable,
                "pair is not congruent-diagonalizable (Jordan, complex or coupled structure)");
  }
  const Eigen::Index n = pair.n();
  Mat Z(n, n);
  RVec J = RVec::Zero(n), Lam = RVec::Zero(n);
  Eigen::Index c = 0;
  for (size_t k = 0; k < an.pos_vectors.size(); ++k, ++c) {
    Z.col(c) = an.pos_vectors[k];
    J(c) = 1.0;
    Lam(c) = an.spectrum.pos[k].value;
  }
  for (size_t k = 0; k < an.neg_vectors.size(); ++k, ++c) {
    Z.col(c) = an.neg_vectors[k];
    J(c) = -1.0;
    Lam(c) = -an.spectrum.neg[k].value;
  }
  for (Eigen::Index k = 0; k < an.infinite_vectors.cols(); ++k, ++c) {
    const double a = an.infinite_values(k);
    Z.col(c) = an.infinite_vectors.col(k) / std::sqrt(std::abs(a));
    Lam(c) = a > 0 ? 1.0 : -1.0;
  }
  for (Eigen::Index k = 0; k < an.deflated_basis.cols(); ++k, ++c) {
    Z.col(c) = an.deflated_basis.col(k);
  }
  if (c != n) {
    throw Error(ErrorKind::NotDiagonalizable, "eigenvector count does not match the order");
  }
  Eigen::JacobiSVD<Mat> svd(Z);
  const RVec& sv = svd.singularValues();
  if (!(sv(n - 1) > tols.rank_tol * sv(0))) {
    throw Error(ErrorKind::IllConditioned, "congruence transform is numerically singular");
  }
  CongruentDiagonalization cd;
  cd.Y = Z.inverse();
  cd.J = J;
  cd.Lambda = Lam;
  const Mat Jm = J.cast<cplx>().asDiagonal();
  const Mat Lm = Lam.cast<cplx>().asDiagonal();
  cd.residual_B = (cd.Y.adjoint() * Jm * cd.Y - pair.B.mat()).norm();
  cd.residual_A = (cd.Y.adjoint() * Lm * cd.Y - pair.A.mat()).norm();
  return cd;
}

CongruentDiagonalization congruent_diagonalize(const MatrixPair& pair, const ToleranceSet& tols) {
  return congruent_diagonalize(pair, analyze_pencil(pair, tols), tols);
}

}  // namespace tracemin
