// Random instance generators shared by the unit and acceptance tests.
#pragma once

#include "oracle.hpp"
#include "tracemin/genpairs.hpp"
#include "tracemin/hyperbolic.hpp"
#include "tracemin/tracemin.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace corpora {

using namespace tracemin;

// Diagonalizable pair made of Tr(1) blocks only. With `psd` the positive
// type values lie above `shift` and the negative type values below it; the
// reverse holds otherwise, giving a negative semidefinite pair.
struct TypedBlocks {
  std::vector<double> pos;
  std::vector<double> neg;
  std::vector<BlockSpec> specs() const {
    std::vector<BlockSpec> s;
    for (double v : pos) s.push_back(BlockSpec::Tr(1, v, 1));
    for (double v : neg) s.push_back(BlockSpec::Tr(1, v, -1));
    return s;
  }
};

inline TypedBlocks semidefinite_values(int np, int nm, double shift, bool psd, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 3.0);
  TypedBlocks b;
  for (int i = 0; i < np; ++i) b.pos.push_back(shift + (psd ? 1 : -1) * u(rng));
  for (int i = 0; i < nm; ++i) b.neg.push_back(shift - (psd ? 1 : -1) * u(rng));
  std::sort(b.pos.begin(), b.pos.end());
  std::sort(b.neg.begin(), b.neg.end());
  return b;
}

inline ProblemInstance problem_from(const Assembly& a, const Assembly& h) {
  return ProblemInstance(a.pair, h.pair);
}

// Sum of hat-descending times pair-ascending over positive type plus
// hat-descending times pair-ascending over negative type, for equal counts.
inline double equal_inertia_value(std::vector<double> hp, std::vector<double> hn,
                                  std::vector<double> p, std::vector<double> n) {
  std::sort(hp.begin(), hp.end(), std::greater<>());
  std::sort(hn.begin(), hn.end(), std::greater<>());
  std::sort(p.begin(), p.end());
  std::sort(n.begin(), n.end());
  double v = 0.0;
  for (size_t i = 0; i < hp.size(); ++i) v += hp[i] * p[i];
  for (size_t j = 0; j < hn.size(); ++j) v += hn[j] * n[j];
  return v;
}

// Smallest sampled objective over `samples` feasible points.
inline double sampled_min(const ProblemInstance& pb, int samples, double spread, std::uint64_t seed) {
  const FeasibleFrame fr = feasible_frame(pb.pair.B.mat(), pb.hat_pair.B.mat(), pb.tolerances.rank_tol);
  Rng rng(seed);
  double best = 1e300;
  for (int s = 0; s < samples; ++s) {
    const Mat X = sample_original(fr, spread, spread, rng);
    const Mat M = pb.hat_pair.A.mat() * X.adjoint() * pb.pair.A.mat() * X;
    best = std::min(best, M.trace().real());
  }
  return best;
}

// Random block list of total order at most max_order, mixing every kind.
inline std::vector<BlockSpec> random_specs(int max_order, std::mt19937_64& rng, bool nonsingular_b) {
  std::uniform_int_distribution<int> kind(0, 9), pp(1, 3), sg(0, 1);
  std::uniform_real_distribution<double> u(-3, 3), ub(0.2, 2);
  std::vector<BlockSpec> specs;
  int order = 0;
  for (int attempts = 0; attempts < 40; ++attempts) {
    BlockSpec s;
    const int k = kind(rng);
    const int eta = sg(rng) ? 1 : -1;
    if (k <= 4) s = BlockSpec::Tr(k <= 3 ? 1 : pp(rng), u(rng), eta);
    else if (k == 5) s = BlockSpec::Tc(1 + (pp(rng) == 3), u(rng), ub(rng));
    else if (nonsingular_b) s = BlockSpec::Tr(1, u(rng), eta);
    else if (k == 6) s = BlockSpec::To();
    else if (k == 7) s = BlockSpec::Tinf(pp(rng) == 3 ? 2 : 1, eta);
    else if (k == 8) s = BlockSpec::Ts(1);
    else s = BlockSpec::Tr(1, u(rng), eta);
    if (order + s.order() > max_order) break;
    order += s.order();
    specs.push_back(s);
    if (order >= 2 && sg(rng) && sg(rng)) break;
  }
  if (specs.empty()) specs.push_back(BlockSpec::Tr(1, u(rng), 1));
  return specs;
}

}  // namespace corpora
