#include "tracemin/witness.hpp"

#include "tracemin/hyperbolic.hpp"
#include "tracemin/spectral.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tracemin {

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::MixedSignSlope: return "MixedSignSlope";
    case WitnessKind::ComplexBlockSlope: return "ComplexBlockSlope";
    case WitnessKind::InfiniteBlockRay: return "InfiniteBlockRay";
    case WitnessKind::CoupledRay: return "CoupledRay";
  }
  return "MixedSignSlope";
}

const char* to_string(WitnessMode m) {
  switch (m) {
    case WitnessMode::Quadratic: return "Quadratic";
    case WitnessMode::Cross: return "Cross";
    case WitnessMode::Linear: return "Linear";
    case WitnessMode::Squared: return "Squared";
  }
  return "Quadratic";
}

namespace {

constexpr double kPi = 3.14159265358979323846;
// Depth the coupled-ray base point is tuned for.
constexpr double kTargetDepth = 1e6;

// Orthonormal basis of the nullspace of M (columns).
Mat right_null(const Mat& M) {
  const Eigen::Index cols = M.cols();
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
  const RVec& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (top > 0.0 && sv(i) > 1e-12 * top) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

// Re-orthonormalizes a 2-column frame so that Z^H B Z = diag(1, -1).
bool polish_pair(Mat& Z, const Mat& B) {
  const EighResult e = eigh(herm_part(Z.adjoint() * B * Z));
  if (!(e.values(0) < 0.0 && e.values(1) > 0.0)) return false;
  Mat M(2, 2);
  M.col(0) = e.vectors.col(1) / std::sqrt(e.values(1));
  M.col(1) = e.vectors.col(0) / std::sqrt(-e.values(0));
  Z = Z * M;
  return true;
}

// B-orthonormal frame of span(W): positive columns first (p of them), then q negative.
bool signed_frame(const Mat& W, const Mat& B, int p, int q, Mat& out) {
  out = Mat(W.rows(), p + q);
  if (p + q == 0) return true;
  if (W.cols() == 0) return false;
  const EighResult e = eigh(herm_part(W.adjoint() * B * W));
  const double sc = std::max(e.values.cwiseAbs().maxCoeff(), 1e-300);
  int have_p = 0, have_q = 0;
  for (Eigen::Index i = e.values.size() - 1; i >= 0 && have_p < p; --i) {
    if (e.values(i) > 1e-10 * sc) {
      out.col(have_p++) = W * e.vectors.col(i) / std::sqrt(e.values(i));
    }
  }
  for (Eigen::Index i = 0; i < e.values.size() && have_q < q; ++i) {
    if (e.values(i) < -1e-10 * sc) {
      out.col(p + have_q++) = W * e.vectors.col(i) / std::sqrt(-e.values(i));
    }
  }
  return have_p == p && have_q == q;
}

struct PairBlock {
  Mat Z;
  Mat AS;
  bool complex = false;
  std::string desc;
};

struct HatBlock {
  Mat Z;
  RVec J;
  std::vector<int> cols;
  Mat L;  // 2x2 form, zero in a padded slot
  bool complex = false;
  std::string desc;
};

struct Candidate {
  int pi = 0, hi = 0;
  WitnessMode mode = WitnessMode::Quadratic;
  double phi = 0.0, phi_hat = 0.0;
  double slope = 0.0;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

Mat complex_frame(const ComplexEigenPair& cp) {
  Mat Z(cp.x.size(), 2);
  Z.col(0) = (cp.x + cp.y) / std::sqrt(2.0);
  Z.col(1) = (cp.x - cp.y) / std::sqrt(2.0);
  return Z;
}

std::vector<PairBlock> pair_blocks(const PencilAnalysis& an, const Mat& A, const Mat& B) {
  std::vector<PairBlock> out;
  for (size_t i = 0; i < an.pos_vectors.size(); ++i) {
    if (an.spectrum.pos[i].jordan_pair) continue;
    for (size_t j = 0; j < an.neg_vectors.size(); ++j) {
      if (an.spectrum.neg[j].jordan_pair) continue;
      PairBlock pb;
      pb.Z = Mat(A.rows(), 2);
      pb.Z.col(0) = an.pos_vectors[i];
      pb.Z.col(1) = an.neg_vectors[j];
      if (!polish_pair(pb.Z, B)) continue;
      pb.AS = herm_part(pb.Z.adjoint() * A * pb.Z);
      pb.desc = "pair eigenvalues " + fmt(an.spectrum.pos[i].value) + " (positive type), " +
                fmt(an.spectrum.neg[j].value) + " (negative type)";
      out.push_back(pb);
    }
  }
  for (const auto& cp : an.complex_pairs) {
    PairBlock pb;
    pb.Z = complex_frame(cp);
    if (!polish_pair(pb.Z, B)) continue;
    pb.AS = herm_part(pb.Z.adjoint() * A * pb.Z);
    pb.complex = true;
    pb.desc = "pair complex eigenvalue " + fmt(cp.mu.real()) + " + " + fmt(cp.mu.imag()) + "i";
    out.push_back(pb);
  }
  return out;
}

std::vector<HatBlock> hat_blocks(const PencilAnalysis& an, const Mat& A, const Mat& B) {
  std::vector<HatBlock> out;
  auto one = [&](const Vec& z, bool pos, double value) {
    HatBlock hb;
    hb.Z = z;
    const double g = (z.adjoint() * B * z)(0, 0).real();
    if (std::abs(g) < 1e-12) return;
    hb.Z /= std::sqrt(std::abs(g));
    hb.J = RVec::Constant(1, pos ? 1.0 : -1.0);
    hb.cols = {pos ? 0 : 1};
    hb.L = Mat::Zero(2, 2);
    const double a = (hb.Z.adjoint() * A * hb.Z)(0, 0).real();
    hb.L(pos ? 0 : 1, pos ? 0 : 1) = a;
    hb.desc = std::string("hat eigenvalue ") + fmt(value) + (pos ? " (positive type)" : " (negative type)") +
              " against a padded zero";
    out.push_back(hb);
  };
  for (size_t i = 0; i < an.pos_vectors.size(); ++i) {
    if (an.spectrum.pos[i].jordan_pair) continue;
    one(an.pos_vectors[i], true, an.spectrum.pos[i].value);
  }
  for (size_t j = 0; j < an.neg_vectors.size(); ++j) {
    if (an.spectrum.neg[j].jordan_pair) continue;
    one(an.neg_vectors[j], false, an.spectrum.neg[j].value);
  }
  for (size_t i = 0; i < an.pos_vectors.size(); ++i) {
    if (an.spectrum.pos[i].jordan_pair) continue;
    for (size_t j = 0; j < an.neg_vectors.size(); ++j) {
      if (an.spectrum.neg[j].jordan_pair) continue;
      HatBlock hb;
      hb.Z = Mat(A.rows(), 2);
      hb.Z.col(0) = an.pos_vectors[i];
      hb.Z.col(1) = an.neg_vectors[j];
      if (!polish_pair(hb.Z, B)) continue;
      hb.J = RVec(2);
      hb.J << 1.0, -1.0;
      hb.cols = {0, 1};
      hb.L = herm_part(hb.Z.adjoint() * A * hb.Z);
      hb.desc = "hat eigenvalues " + fmt(an.spectrum.pos[i].value) + " (positive type), " +
                fmt(an.spectrum.neg[j].value) + " (negative type)";
      out.push_back(hb);
    }
  }
  for (const auto& cp : an.complex_pairs) {
    HatBlock hb;
    hb.Z = complex_frame(cp);
    if (!polish_pair(hb.Z, B)) continue;
    hb.J = RVec(2);
    hb.J << 1.0, -1.0;
    hb.cols = {0, 1};
    hb.L = herm_part(hb.Z.adjoint() * A * hb.Z);
    hb.complex = true;
    hb.desc = "hat complex eigenvalue " + fmt(cp.mu.real()) + " + " + fmt(cp.mu.imag()) + "i";
    out.push_back(hb);
  }
  return out;
}

// Best parametrization of one (pair block, hat block) combination.
Candidate best_mode(const PairBlock& P, const HatBlock& H) {
  const double sa = P.AS(0, 0).real() + P.AS(1, 1).real();
  const double sh = H.L(0, 0).real() + H.L(1, 1).real();
  const double be = std::abs(P.AS(0, 1)), bh = std::abs(H.L(0, 1));
  const double th = be > 0.0 ? std::arg(P.AS(0, 1)) : 0.0;
  const double thh = bh > 0.0 ? std::arg(H.L(0, 1)) : 0.0;
  const double scale = (1.0 + std::abs(sa) + be) * (1.0 + std::abs(sh) + bh);
  const double tiny = 1e-10 * scale;
  // Re(b) = eps * beta with phi = -theta (eps = 1), pi - theta (eps = -1), pi/2 - theta (eps = 0).
  auto phase = [](double theta, int eps) {
    return eps > 0 ? -theta : (eps < 0 ? kPi - theta : 0.5 * kPi - theta);
  };
  std::vector<Candidate> opts;
  {
    Candidate c;
    c.mode = WitnessMode::Quadratic;
    c.phi = phase(th, 0);
    c.phi_hat = phase(thh, 0);
    c.slope = sh * sa;
    opts.push_back(c);
  }
  for (int e : {1, -1}) {
    const double R = 2.0 * e * be * sh - 2.0 * e * bh * sa;
    if (std::abs(R) <= tiny) {
      Candidate c;
      c.mode = WitnessMode::Quadratic;
      c.phi = phase(th, e);
      c.phi_hat = phase(thh, -e);
      c.slope = sh * sa - 4.0 * be * bh;
      opts.push_back(c);
    }
  }
  if (std::abs(sh * sa) <= tiny) {
    if (be > 0.0 && sh != 0.0) {
      Candidate c;
      c.mode = WitnessMode::Cross;
      const int e = sh > 0 ? -1 : 1;
      c.phi = phase(th, e);
      c.phi_hat = phase(thh, 0);
      c.slope = -2.0 * be * std::abs(sh);
      opts.push_back(c);
    }
    if (bh > 0.0 && sa != 0.0) {
      Candidate c;
      c.mode = WitnessMode::Cross;
      const int e = sa > 0 ? -1 : 1;
      c.phi = phase(th, 0);
      c.phi_hat = phase(thh, e);
      c.slope = -2.0 * bh * std::abs(sa);
      opts.push_back(c);
    }
  }
  Candidate best = opts.front();
  for (const auto& c : opts) {
    if (c.slope < best.slope) best = c;
  }
  return best;
}

double cross_s(double t) {
  const double t4 = t * t * t * t;
  const double s2 = 2.0 * t4 / (1.0 + std::sqrt(1.0 + 4.0 * t4));
  return std::sqrt(s2);
}

Mat core(double s, double phi, double phi_hat, const std::vector<int>& cols) {
  const double c = std::sqrt(1.0 + s * s);
  Mat H(2, 2);
  H << c, s, s, c;
  const cplx e1 = std::polar(1.0, phi), e2 = std::polar(1.0, -phi_hat);
  H.row(1) *= e1;
  H.col(1) *= e2;
  Mat out(2, static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) out.col(k) = H.col(cols[k]);
  return out;
}

bool build_block_family(const ProblemInstance& pb, const PairBlock& P, const HatBlock& H,
                        const Candidate& c, WitnessFamily& fam) {
  const Mat& B = pb.pair.B.mat();
  const Mat& Bh = pb.hat_pair.B.mat();
  const int nh = pb.n_hat();
  int hp = 0, hm = 0;
  {
    const Inertia ih = inertia(pb.hat_pair.B, pb.tolerances.rank_tol);
    hp = ih.n_plus;
    hm = ih.n_minus;
  }
  for (Eigen::Index k = 0; k < H.J.size(); ++k) (H.J(k) > 0 ? hp : hm) -= 1;
  if (hp < 0 || hm < 0) return false;
  const Mat W = right_null(P.Z.adjoint() * B);
  Mat FW;
  if (!signed_frame(W, B, hp, hm, FW)) return false;
  Mat FhW(nh, 0);
  if (hp + hm > 0) {
    const Mat Wh = right_null(H.Z.adjoint() * Bh);
    if (!signed_frame(Wh, Bh, hp, hm, FhW)) return false;
  }
  fam.frame = P.Z;
  fam.hat_frame = H.Z;
  fam.hat_frame_J = H.J;
  fam.hat_cols = H.cols;
  fam.phi = c.phi;
  fam.phi_hat = c.phi_hat;
  fam.mode = c.mode;
  fam.slope = c.slope;
  fam.kind = (P.complex || H.complex) ? WitnessKind::ComplexBlockSlope : WitnessKind::MixedSignSlope;
  fam.X_fixed = (hp + hm > 0) ? Mat(FW * FhW.adjoint()) : Mat(Mat::Zero(pb.n(), nh));
  fam.selectors = P.desc + "; " + H.desc + "; mode " + to_string(c.mode);
  fam.offset = 0.0;
  fam.offset = trace_objective(pb, evaluate_witness(fam, 0.0).X);
  return true;
}

// Ray along z q^H over a base feasible point.
void finish_ray(const ProblemInstance& pb, WitnessFamily& fam) {
  fam.offset = trace_objective(pb, fam.X_fixed);
}

}  // namespace

WitnessFamily build_witness(const ProblemInstance& pb, const InfimumResult& diag,
                            const WitnessOptions& opts) {
  if (diag.verdict != Verdict::NegInfinite) {
    throw Error(ErrorKind::NoWitnessConstructible, "the infimum is not -infinity");
  }
  const ToleranceSet& tols = pb.tolerances;
  const Mat& A = pb.pair.A.mat();
  const Mat& B = pb.pair.B.mat();
  const Mat& Ah = pb.hat_pair.A.mat();
  const Mat& Bh = pb.hat_pair.B.mat();
  const PencilAnalysis an = analyze_pencil(pb.pair, tols);
  const PencilAnalysis anh = analyze_pencil(pb.hat_pair, tols);
  const FeasibleFrame frame = feasible_frame(B, Bh, tols.rank_tol);

  WitnessFamily fam;
  fam.problem = pb;

  if (an.spectrum.infinite_definite_sign == InfiniteSign::Coupled) {
    Eigen::Index k = 0;
    an.infinite_values.cwiseAbs().minCoeff(&k);
    const Vec z = an.infinite_vectors.col(k);
    const double taus[] = {1.0, 3.0, 10.0, 30.0, 100.0, 300.0};
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i) {
      Rng rng(opts.seed + 7919ULL * static_cast<std::uint64_t>(i));
      const Mat Xb = sample_original(frame, taus[i], 0.0, rng);
      const Mat r = z.adjoint() * A * Xb;  // 1 x nh
      const Vec v = Ah * r.adjoint();
      const double vn = v.norm();
      if (!(vn > 0.0)) continue;
      const double Tb = trace_objective(pb, Xb);
      const double est = Xb.norm() + (std::abs(Tb) + kTargetDepth) / (2.0 * vn);
      if (est < best) {
        best = est;
        fam.X_fixed = Xb;
        fam.direction = z * (-v / vn).adjoint();
        fam.slope = -2.0 * vn;
      }
    }
    if (!std::isfinite(best)) {
      throw Error(ErrorKind::NoWitnessConstructible, "coupled direction does not couple to Ahat");
    }
    fam.kind = WitnessKind::CoupledRay;
    fam.mode = WitnessMode::Squared;
    fam.selectors = "nullspace direction of B with singular A-compression, |a| = " +
                    fmt(std::abs(an.infinite_values(k)));
    finish_ray(pb, fam);
    return fam;
  }

  if (an.null_basis.cols() > 0 && an.infinite_values.size() > 0) {
    const EighResult eh = eigh(Ah);
    double best = 0.0;
    Eigen::Index bi = -1, bj = -1;
    for (Eigen::Index i = 0; i < an.infinite_values.size(); ++i) {
      for (Eigen::Index j = 0; j < eh.values.size(); ++j) {
        const double prod = an.infinite_values(i) * eh.values(j);
        if (prod < best) {
          best = prod;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi >= 0 && best < -tols.type_tol) {
      Rng rng(opts.seed);
      Mat Xb = sample_original(frame, 1.0, 0.0, rng);
      const Mat& N = an.null_basis;
      const Mat A22 = herm_part(N.adjoint() * A * N);
      Xb -= N * A22.ldlt().solve(N.adjoint() * A * Xb);
      const Vec z = an.infinite_vectors.col(bi);
      const Vec q = eh.vectors.col(bj);
      fam.kind = WitnessKind::InfiniteBlockRay;
      fam.mode = WitnessMode::Linear;
      fam.X_fixed = Xb;
      fam.direction = z * q.adjoint();
      fam.slope = best;
      fam.selectors = "nullspace direction of B with A-form " + fmt(an.infinite_values(bi)) +
                      " against Ahat eigenvalue " + fmt(eh.values(bj));
      finish_ray(pb, fam);
      return fam;
    }
  }

  const std::vector<PairBlock> P = pair_blocks(an, A, B);
  const std::vector<HatBlock> H = hat_blocks(anh, Ah, Bh);
  std::vector<Candidate> cands;
  for (size_t i = 0; i < P.size(); ++i) {
    for (size_t j = 0; j < H.size(); ++j) {
      Candidate c = best_mode(P[i], H[j]);
      if (c.slope < -tols.type_tol) {
        c.pi = static_cast<int>(i);
        c.hi = static_cast<int>(j);
        cands.push_back(c);
      }
    }
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.slope < b.slope; });
  for (const Candidate& c : cands) {
    if (build_block_family(pb, P[c.pi], H[c.hi], c, fam)) return fam;
  }
  throw Error(ErrorKind::NoWitnessConstructible,
              std::string("no realizable divergent direction for diagnosis ") + to_string(diag.reason));
}

WitnessPoint evaluate_witness(const WitnessFamily& fam, double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidInput, "t must be nonnegative");
  WitnessPoint p;
  switch (fam.mode) {
    case WitnessMode::Quadratic:
    case WitnessMode::Cross: {
      const double s = fam.mode == WitnessMode::Quadratic ? t : cross_s(t);
      p.X = fam.X_fixed + fam.frame * core(s, fam.phi, fam.phi_hat, fam.hat_cols) * fam.hat_frame.adjoint();
      break;
    }
    case WitnessMode::Linear:
      p.X = fam.X_fixed + t * fam.direction;
      break;
    case WitnessMode::Squared:
      p.X = fam.X_fixed + (t * t) * fam.direction;
      break;
  }
  p.trace_value = trace_objective(fam.problem, p.X);
  p.trend_value = fam.slope * t * t + fam.offset;
  p.residual = feasibility_residual(fam.problem, p.X);
  return p;
}

Certification certify_unbounded(const WitnessFamily& fam, double threshold, double t_max) {
  if (!(t_max > 0.0)) {
    throw Error(ErrorKind::CertificationFailed, "t_max must be positive");
  }
  const double feas = fam.problem.tolerances.feas_tol;
  double t = 1.0;
  if (fam.slope < 0.0) {
    const double need = (threshold - fam.offset) / fam.slope;
    t = need > 0.0 ? 1.01 * std::sqrt(need) : 1.0;
  }
  t = std::min(std::max(t, 1e-6), t_max);
  WitnessPoint last;
  while (true) {
    last = evaluate_witness(fam, t);
    const double bound = feas * (1.0 + t * t);
    if (last.trace_value <= threshold && last.residual <= bound) {
      return {t, last.trace_value, last.residual, bound};
    }
    if (t >= t_max) break;
    t = std::min(1.5 * t, t_max);
  }
  throw Error(ErrorKind::CertificationFailed,
              "no t <= t_max reached the threshold (last trace " + fmt(last.trace_value) +
                  ", residual " + fmt(last.residual) + ")");
}

}  // namespace tracemin
