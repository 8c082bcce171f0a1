#include "tracemin/definiteness.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace tracemin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lambda_min(const Mat& M) {
  Eigen::SelfAdjointEigenSolver<Mat> es(M, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::KernelFailure, "eigenvalue kernel failed");
  }
  return es.eigenvalues()(0);
}

RVec herm_eigenvalues(const Mat& M) {
  Eigen::SelfAdjointEigenSolver<Mat> es(M, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::KernelFailure, "eigenvalue kernel failed");
  }
  return es.eigenvalues();
}

// Moves x away from the interior point m until f(x) < level or the cap is hit.
// Returns false on overflow.
template <class F>
bool push_below(F& f, double m, double& x, double& fx, double level, double cap) {
  while (fx >= level) {
    const double nx = m + 2.0 * (x - m);
    if (std::abs(nx) > cap) return false;
    x = nx;
    fx = f(x);
  }
  return true;
}

template <class F>
double bisect_level(F& f, double inside, double outside, double level) {
  // f(inside) >= level > f(outside)
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    if (f(mid) >= level) {
      inside = mid;
    } else {
      outside = mid;
    }
    if (std::abs(outside - inside) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                          (1.0 + std::abs(inside))) {
      break;
    }
  }
  return inside;
}

}  // namespace

double lambda_min_shift(const Mat& A, const Mat& B, double shift) {
  return lambda_min(A - shift * B);
}

double lambda_min_shift(const MatrixPair& pair, double shift) {
  return lambda_min_shift(pair.A.mat(), pair.B.mat(), shift);
}

ShiftSearch psd_shift_search(const Mat& A, const Mat& B, const ToleranceSet& tols,
                             const DefinitenessOptions& opts) {
  ShiftSearch out;
  const Eigen::Index n = A.rows();
  if (n == 0) {
    out.found = true;
    out.lo = -kInf;
    out.hi = kInf;
    return out;
  }
  const RVec eb = herm_eigenvalues(B);
  const double normA = herm_eigenvalues(A).cwiseAbs().maxCoeff();
  const double normB = eb.cwiseAbs().maxCoeff();
  out.scale = 1.0 + normA + normB;
  const double level = -tols.psd_tol * out.scale;

  double smin = kInf;
  for (Eigen::Index i = 0; i < eb.size(); ++i) {
    const double d = std::abs(eb(i));
    if (d > tols.rank_tol * normB) smin = std::min(smin, d);
  }
  if (!std::isfinite(smin)) smin = tols.rank_tol;
  const double rho = normA / std::max(smin, tols.rank_tol);
  const double cap =
      opts.overflow_cap > 0.0 ? opts.overflow_cap : std::max(1.0 / tols.rank_tol, 4.0 * (1.0 + rho));

  auto f = [&](double s) { return lambda_min(A - s * B); };

  // Expand the bracket until f turns down on both sides.
  const double m = 0.0;
  const double fm = f(m);
  double a = -1.0 - rho, b = 1.0 + rho;
  double fa = f(a), fb = f(b);
  bool left_flat = false, right_flat = false;
  while (fa >= fm) {
    const double na = m + 2.0 * (a - m);
    if (std::abs(na) > cap) {
      left_flat = true;
      break;
    }
    a = na;
    fa = f(a);
  }
  while (fb >= fm) {
    const double nb = m + 2.0 * (b - m);
    if (std::abs(nb) > cap) {
      right_flat = true;
      break;
    }
    b = nb;
    fb = f(b);
  }
  out.overflow = left_flat || right_flat;

  // Golden-section search for the maximum of the concave f on [a, b].
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double best_x = m, best_f = fm;
  auto consider = [&](double x, double fx) {
    if (fx > best_f) {
      best_f = fx;
      best_x = x;
    }
  };
  consider(a, fa);
  consider(b, fb);
  double lo = a, hi = b;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  consider(x1, f1);
  consider(x2, f2);
  const double width_target = 1e-12 * out.scale;
  for (int it = 0; it < opts.max_iter && (hi - lo) > width_target; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
      consider(x2, f2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
      consider(x1, f1);
    }
  }
  out.max_f = best_f;
  out.argmax = best_x;
  if (best_f < level) return out;
  // A maximum found only far out on an unbounded side may be a supremum
  // approached asymptotically (f ~ -c/|s|). Require the level at a moderate
  // shift on that side as well.
  const double probe_mag = std::max(4.0 * (1.0 + rho), 1e-4 * cap);
  if (out.overflow && std::abs(best_x) > probe_mag) {
    const double xp = std::copysign(probe_mag, best_x);
    if (f(xp) < level) return out;
  }
  out.found = true;

  if (best_f <= 0.0) {
    // Boundary case: the admissible set is a single numerical point.
    out.lo = out.hi = best_x;
    return out;
  }
  const double edge = 0.0;
  double xa = std::min(a, best_x), fxa = f(xa);
  if ((left_flat && fxa >= edge) || !push_below(f, best_x, xa, fxa, edge, cap)) {
    out.lo = -kInf;
  } else {
    out.lo = bisect_level(f, best_x, xa, edge);
  }
  double xb = std::max(b, best_x), fxb = f(xb);
  if ((right_flat && fxb >= edge) || !push_below(f, best_x, xb, fxb, edge, cap)) {
    out.hi = kInf;
  } else {
    out.hi = bisect_level(f, best_x, xb, edge);
  }
  return out;
}

DefinitenessReport definiteness_interval(const MatrixPair& pair, const ToleranceSet& tols,
                                         const DefinitenessOptions& opts) {
  DefinitenessReport r;
  const Mat& A = pair.A.mat();
  const Mat& B = pair.B.mat();
  const ShiftSearch p = psd_shift_search(A, B, tols, opts);
  const ShiftSearch q = psd_shift_search(-A, B, tols, opts);
  r.scale = p.scale;
  r.is_psd_pair = p.found;
  r.max_fmin = p.max_f;
  r.argmax_shift = p.argmax;
  if (p.found) r.psd_interval = std::make_pair(p.lo, p.hi);
  // A - sB <= 0  iff  (-A) - (-s)B >= 0
  r.is_nsd_pair = q.found;
  r.nsd_max = q.max_f;
  r.nsd_argmax = -q.argmax;
  if (q.found) r.nsd_interval = std::make_pair(-q.hi, -q.lo);
  r.bracket_overflow = p.overflow || q.overflow;
  return r;
}

}  // namespace tracemin
