#include "tracemin/genpairs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tracemin {

const char* to_string(BlockKind k) {
  switch (k) {
    case BlockKind::To: return "To";
    case BlockKind::Ts: return "Ts";
    case BlockKind::Tinf: return "Tinf";
    case BlockKind::Tc: return "Tc";
    case BlockKind::Tr: return "Tr";
  }
  return "Tr";
}

int BlockSpec::order() const {
  switch (kind) {
    case BlockKind::To: return 1;
    case BlockKind::Ts: return 2 * p + 1;
    case BlockKind::Tc: return 2 * p;
    default: return p;
  }
}

Mat k_template(int p, cplx tau) {
  Mat K = Mat::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    K(i, p - 1 - i) = tau;
    if (i >= 1) K(i, p - i) = 1.0;
  }
  return K;
}

Mat f_template(int p) {
  Mat F = Mat::Zero(p, p);
  for (int i = 0; i < p; ++i) F(i, p - 1 - i) = 1.0;
  return F;
}

namespace {

void check_spec(const BlockSpec& s) {
  if (s.kind == BlockKind::To) return;
  if (s.p < 1) throw Error(ErrorKind::InvalidSpec, "block size p must be at least 1");
  if (s.p > 64) throw Error(ErrorKind::InvalidSpec, "block size p is too large");
  if ((s.kind == BlockKind::Tr || s.kind == BlockKind::Tinf) && s.eta != 1 && s.eta != -1) {
    throw Error(ErrorKind::InvalidSpec, "eta must be +1 or -1");
  }
  if (s.kind == BlockKind::Tc && !(s.beta > 0.0)) {
    throw Error(ErrorKind::InvalidSpec, "Tc blocks need beta > 0");
  }
  if (!std::isfinite(s.alpha) || !std::isfinite(s.beta)) {
    throw Error(ErrorKind::InvalidSpec, "block parameters must be finite");
  }
}

// Inertia of eta * F_p.
Inertia f_inertia(int p, int eta) {
  Inertia in;
  const int up = (p + 1) / 2, dn = p / 2;
  in.n_plus = eta > 0 ? up : dn;
  in.n_minus = eta > 0 ? dn : up;
  return in;
}

}  // namespace

MatrixPair block(const BlockSpec& s) {
  check_spec(s);
  const int p = s.p;
  const double eta = s.eta;
  switch (s.kind) {
    case BlockKind::To:
      return pair_of(Mat::Zero(1, 1), Mat::Zero(1, 1));
    case BlockKind::Ts: {
      const int m = 2 * p + 1;
      Mat B = Mat::Zero(m, m);
      B.topRightCorner(p, p) = f_template(p);
      B.bottomLeftCorner(p, p) = f_template(p);
      return pair_of(k_template(m, 0.0), B);
    }
    case BlockKind::Tinf:
      return pair_of(eta * f_template(p), eta * k_template(p, 0.0));
    case BlockKind::Tc: {
      Mat A = Mat::Zero(2 * p, 2 * p);
      A.topRightCorner(p, p) = k_template(p, cplx(s.alpha, s.beta));
      A.bottomLeftCorner(p, p) = k_template(p, cplx(s.alpha, -s.beta));
      return pair_of(A, f_template(2 * p));
    }
    case BlockKind::Tr:
      return pair_of(eta * k_template(p, s.alpha), eta * f_template(p));
  }
  throw Error(ErrorKind::InvalidSpec, "unknown block kind");
}

MatrixPair block_tc_diagonal_b(const BlockSpec& s) {
  if (s.kind != BlockKind::Tc) throw Error(ErrorKind::InvalidSpec, "not a Tc block");
  check_spec(s);
  const int p = s.p;
  const cplx ib(0.0, s.beta);
  Mat A(2 * p, 2 * p), B = Mat::Zero(2 * p, 2 * p);
  const Mat F = f_template(p);
  const Mat K = k_template(p, s.alpha);
  A << K, -ib * F, ib * F, -K;
  B.topLeftCorner(p, p) = F;
  B.bottomRightCorner(p, p) = -F;
  return pair_of(A, B);
}

MatrixPair direct_sum(const std::vector<BlockSpec>& specs) {
  if (specs.empty()) throw Error(ErrorKind::InvalidSpec, "empty block list");
  int n = 0;
  for (const auto& s : specs) {
    check_spec(s);
    n += s.order();
  }
  if (n > 512) throw Error(ErrorKind::InvalidSpec, "assembled order is too large");
  Mat A = Mat::Zero(n, n), B = Mat::Zero(n, n);
  int off = 0;
  for (const auto& s : specs) {
    const MatrixPair b = block(s);
    const int m = b.n();
    A.block(off, off, m, m) = b.A.mat();
    B.block(off, off, m, m) = b.B.mat();
    off += m;
  }
  return pair_of(A, B);
}

GroundTruth ground_truth(const std::vector<BlockSpec>& specs, double) {
  GroundTruth t;
  constexpr double inf = std::numeric_limits<double>::infinity();
  bool psd_kinds = true, nsd_kinds = true, diag = true;
  // PSD shifts satisfy eta (alpha - s) >= 0 for every Tr(1), s = alpha for Tr(2).
  double psd_lo = -inf, psd_hi = inf, nsd_lo = -inf, nsd_hi = inf;
  for (const auto& s : specs) {
    check_spec(s);
    const int p = s.p;
    switch (s.kind) {
      case BlockKind::To:
        t.inertia_B.n_zero += 1;
        t.deflated_dims += 1;
        break;
      case BlockKind::Ts:
        t.inertia_B.n_plus += p;
        t.inertia_B.n_minus += p;
        t.inertia_B.n_zero += 1;
        psd_kinds = nsd_kinds = diag = false;
        break;
      case BlockKind::Tinf: {
        const Inertia f = f_inertia(p - 1, s.eta);
        t.inertia_B.n_plus += f.n_plus;
        t.inertia_B.n_minus += f.n_minus;
        t.inertia_B.n_zero += 1;
        if (p > 1) {
          psd_kinds = nsd_kinds = diag = false;
        } else if (s.eta > 0) {
          nsd_kinds = false;
        } else {
          psd_kinds = false;
        }
        break;
      }
      case BlockKind::Tc:
        t.inertia_B.n_plus += p;
        t.inertia_B.n_minus += p;
        t.complex_count += 2 * p;
        psd_kinds = nsd_kinds = false;
        if (p > 1) diag = false;
        break;
      case BlockKind::Tr: {
        const Inertia f = f_inertia(p, s.eta);
        t.inertia_B.n_plus += f.n_plus;
        t.inertia_B.n_minus += f.n_minus;
        if (p == 1) {
          (s.eta > 0 ? t.pos : t.neg).push_back(s.alpha);
          if (s.eta > 0) {
            psd_hi = std::min(psd_hi, s.alpha);
            nsd_lo = std::max(nsd_lo, s.alpha);
          } else {
            psd_lo = std::max(psd_lo, s.alpha);
            nsd_hi = std::min(nsd_hi, s.alpha);
          }
        } else {
          diag = false;
          if (p == 2) {
            t.pos.push_back(s.alpha);
            t.neg.push_back(s.alpha);
            t.jordan_pairs += 1;
            if (s.eta > 0) {
              psd_lo = std::max(psd_lo, s.alpha);
              psd_hi = std::min(psd_hi, s.alpha);
              nsd_kinds = false;
            } else {
              nsd_lo = std::max(nsd_lo, s.alpha);
              nsd_hi = std::min(nsd_hi, s.alpha);
              psd_kinds = false;
            }
          } else {
            psd_kinds = nsd_kinds = false;
          }
        }
        break;
      }
    }
  }
  t.psd = psd_kinds && psd_lo <= psd_hi;
  t.nsd = nsd_kinds && nsd_lo <= nsd_hi;
  t.diagonalizable = diag;
  bool only_simple = true;
  for (const auto& s : specs) {
    if (s.p > 1 && s.kind != BlockKind::To) only_simple = false;
    if (s.kind == BlockKind::Ts) only_simple = false;
  }
  t.typed_values_defined = t.psd || t.nsd || only_simple;
  if (!t.typed_values_defined) {
    t.pos.clear();
    t.neg.clear();
    t.jordan_pairs = 0;
  }
  std::sort(t.pos.begin(), t.pos.end());
  std::sort(t.neg.begin(), t.neg.end());
  return t;
}

Assembly assemble(const std::vector<BlockSpec>& specs, std::uint64_t scramble_seed,
                  double conditioning_cap) {
  const MatrixPair base = direct_sum(specs);
  Assembly out;
  out.truth = ground_truth(specs);
  const Congruence c = random_congruence(base, scramble_seed, conditioning_cap);
  out.pair = c.pair;
  out.Y = c.Y;
  return out;
}

}  // namespace tracemin
