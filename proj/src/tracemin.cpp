#include "tracemin/tracemin.hpp"

#include "tracemin/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace tracemin {

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::I: return "i";
    case CaseLabel::II: return "ii";
    case CaseLabel::III: return "iii";
    case CaseLabel::IV: return "iv";
    case CaseLabel::Improper: return "improper";
  }
  return "improper";
}

const char* to_string(ExcludedKind k) {
  switch (k) {
    case ExcludedKind::AhatZero: return "AhatZero";
    case ExcludedKind::AEqualsMuB: return "AEqualsMuB";
    case ExcludedKind::AhatEqualsMuhatBhat: return "AhatEqualsMuhatBhat";
  }
  return "AhatZero";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "Finite";
    case Verdict::NegInfinite: return "NegInfinite";
    case Verdict::ExcludedConstant: return "ExcludedConstant";
  }
  return "Finite";
}

const char* to_string(SignCase s) {
  switch (s) {
    case SignCase::None: return "None";
    case SignCase::PsdPairs: return "PSD_pairs";
    case SignCase::NsdPairs: return "NSD_pairs";
  }
  return "None";
}

const char* to_string(NegReason r) {
  switch (r) {
    case NegReason::None: return "None";
    case NegReason::NotSemidefinitePair: return "NotSemidefinitePair";
    case NegReason::MixedSigns: return "MixedSigns";
    case NegReason::Improper: return "Improper";
    case NegReason::CoupledInfiniteStructure: return "CoupledInfiniteStructure";
    case NegReason::ComplexEigenvalues: return "ComplexEigenvalues";
  }
  return "None";
}

const char* to_string(Attainable a) { return a == Attainable::Yes ? "Yes" : "Unknown"; }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Inertia swapped(const Inertia& in) { return {in.n_minus, in.n_zero, in.n_plus}; }

double min_value(const std::vector<TypedEigenvalue>& v) {
  return v.empty() ? kInf : v.front().value;
}

double max_value(const std::vector<TypedEigenvalue>& v) {
  return v.empty() ? -kInf : v.back().value;
}

bool has_jordan(const TypedSpectrum& s) {
  for (const auto& e : s.pos) {
    if (e.jordan_pair) return true;
  }
  for (const auto& e : s.neg) {
    if (e.jordan_pair) return true;
  }
  return false;
}

double scalar_multiple(const Mat& A, const Mat& B, double& rel_res) {
  const double bb = B.squaredNorm();
  if (bb == 0.0) {
    rel_res = A.norm() == 0.0 ? 0.0 : kInf;
    return 0.0;
  }
  const double mu = (B.adjoint() * A).trace().real() / bb;
  const double an = A.norm();
  rel_res = an == 0.0 ? 0.0 : (A - mu * B).norm() / an;
  return mu;
}

}  // namespace

void check_feasible(const ProblemInstance& pb) {
  const double rt = pb.tolerances.rank_tol;
  const Inertia ih = inertia(pb.hat_pair.B, rt);
  const Inertia ib = inertia(pb.pair.B, rt);
  if (ih.n_zero > 0) {
    throw Error(ErrorKind::EmptyFeasibleSet, "Bhat is singular; the constraint set is empty");
  }
  if (ih.n_plus > ib.n_plus || ih.n_minus > ib.n_minus) {
    throw Error(ErrorKind::EmptyFeasibleSet,
                "inertia of Bhat exceeds inertia of B; the constraint set is empty");
  }
}

std::optional<ExcludedCase> check_excluded(const ProblemInstance& pb) {
  const Mat& A = pb.pair.A.mat();
  const Mat& B = pb.pair.B.mat();
  const Mat& Ah = pb.hat_pair.A.mat();
  const Mat& Bh = pb.hat_pair.B.mat();
  const double rt = pb.tolerances.rank_tol;
  if (Ah.norm() <= rt * (1.0 + Bh.norm())) {
    return ExcludedCase{ExcludedKind::AhatZero, 0.0, 0.0};
  }
  double res = 0.0;
  const double mu = scalar_multiple(A, B, res);
  if (res <= 1e-9) {
    const Mat BhInv = Bh.inverse();
    const double c = mu * (Ah * BhInv).trace().real();
    return ExcludedCase{ExcludedKind::AEqualsMuB, mu, c};
  }
  if (pb.n() == pb.n_hat() && inertia(pb.pair.B, rt).n_zero == 0) {
    double resh = 0.0;
    const double muh = scalar_multiple(Ah, Bh, resh);
    if (resh <= 1e-9) {
      const double c = muh * B.ldlt().solve(A).trace().real();
      return ExcludedCase{ExcludedKind::AhatEqualsMuhatBhat, muh, c};
    }
  }
  return std::nullopt;
}

PropernessReport properness(const Inertia& iB, const TypedSpectrum& hat, const Inertia& iBh,
                            double tol) {
  if (iBh.n_plus > iB.n_plus || iBh.n_minus > iB.n_minus) {
    throw Error(ErrorKind::InertiaViolation, "inertia of Bhat exceeds inertia of B");
  }
  double scale = 1.0;
  for (const auto& e : hat.pos) scale = std::max(scale, 1.0 + std::abs(e.value));
  for (const auto& e : hat.neg) scale = std::max(scale, 1.0 + std::abs(e.value));
  const double eps = tol * scale;
  const bool eq_p = iB.n_plus == iBh.n_plus, eq_m = iB.n_minus == iBh.n_minus;
  const double pos_min = min_value(hat.pos);  // +inf when empty
  const double neg_max = max_value(hat.neg);  // -inf when empty

  PropernessReport r;
  if (eq_p && eq_m) {
    r.is_proper = true;
    r.case_label = CaseLabel::I;
  } else if (eq_p && !eq_m) {
    if (pos_min >= -eps) {
      r.is_proper = true;
      r.case_label = CaseLabel::II;
      for (size_t j = 0; j < hat.neg.size() && static_cast<int>(j) < iBh.n_minus; ++j) {
        if (hat.neg[j].value > eps) ++r.d_minus;
      }
    }
  } else if (!eq_p && eq_m) {
    if (neg_max <= eps) {
      r.is_proper = true;
      r.case_label = CaseLabel::III;
      for (size_t j = 0; j < hat.pos.size() && static_cast<int>(j) < iBh.n_plus; ++j) {
        if (hat.pos[j].value < -eps) ++r.d_plus;
      }
    }
  } else {
    if (neg_max <= eps && pos_min >= -eps) {
      r.is_proper = true;
      r.case_label = CaseLabel::IV;
    }
  }
  return r;
}

ProblemInstance pad_problem(const ProblemInstance& pb) {
  const double rt = pb.tolerances.rank_tol;
  const Inertia ib = inertia(pb.pair.B, rt);
  const Inertia ih = inertia(pb.hat_pair.B, rt);
  if (ih.n_zero > 0 || ih.n_plus > ib.n_plus || ih.n_minus > ib.n_minus) {
    throw Error(ErrorKind::InertiaViolation, "hat inertia is not dominated by the inertia of B");
  }
  const int cp = ib.n_plus - ih.n_plus, cm = ib.n_minus - ih.n_minus;
  const int nh = pb.n_hat(), m = nh + cp + cm;
  if (m == nh) return pb;
  Mat Ah = Mat::Zero(m, m), Bh = Mat::Zero(m, m);
  Ah.topLeftCorner(nh, nh) = pb.hat_pair.A.mat();
  Bh.topLeftCorner(nh, nh) = pb.hat_pair.B.mat();
  for (int i = 0; i < cp; ++i) Bh(nh + i, nh + i) = 1.0;
  for (int i = 0; i < cm; ++i) Bh(nh + cp + i, nh + cp + i) = -1.0;
  return ProblemInstance(pb.pair, pair_of(Ah, Bh), pb.tolerances);
}

namespace {

// Evaluates the closed form on spectra already oriented to the PSD frame.
std::vector<Term> closed_form_terms(const TypedSpectrum& S, const TypedSpectrum& Sh,
                                    const Inertia& iBh, const PropernessReport& pr) {
  const int np = iBh.n_plus, nm = iBh.n_minus;
  const int dp = pr.d_plus, dm = pr.d_minus;
  const int sp = static_cast<int>(S.pos.size()), sn = static_cast<int>(S.neg.size());
  const int hp = static_cast<int>(Sh.pos.size()), hn = static_cast<int>(Sh.neg.size());
  if (hp < np || hn < nm || sp < np || sn < nm) {
    throw Error(ErrorKind::KernelFailure,
                "typed spectrum has fewer eigenvalues than the inertia requires");
  }
  std::vector<Term> terms;
  auto add = [&](int g, bool pos, int hi, int i) {
    Term t;
    t.group = g;
    t.positive_type = pos;
    t.hat_index = hi;
    t.index = i;
    t.hat_value = pos ? Sh.pos[hi].value : Sh.neg[hi].value;
    t.value = pos ? S.pos[i].value : S.neg[i].value;
    t.product = t.hat_value * t.value;
    terms.push_back(t);
  };
  // Ascending lists: k-th largest is at size-1-k.
  for (int i = 0; i < np - dp; ++i) add(1, true, hp - 1 - i, i);
  for (int i = 0; i < dp; ++i) add(2, true, i, sp - 1 - i);
  for (int j = 0; j < dm; ++j) add(3, false, hn - 1 - j, j);
  for (int j = 0; j < nm - dm; ++j) add(4, false, j, sn - 1 - j);
  return terms;
}

}  // namespace

InfimumResult infimum(const ProblemInstance& pb, const InfimumOptions& opts) {
  check_feasible(pb);
  const ToleranceSet& tols = pb.tolerances;
  InfimumResult res;
  res.inertia_B = inertia(pb.pair.B, tols.rank_tol);
  res.inertia_Bhat = inertia(pb.hat_pair.B, tols.rank_tol);

  if (auto ex = check_excluded(pb)) {
    res.verdict = Verdict::ExcludedConstant;
    res.value = ex->constant;
    res.excluded = ex;
    res.attainable = Attainable::Yes;
    res.detail = std::string("excluded case ") + to_string(ex->which);
    return res;
  }

  const PencilAnalysis an = analyze_pencil(pb.pair, tols);
  const PencilAnalysis anh = analyze_pencil(pb.hat_pair, tols);
  res.spectrum = an.spectrum;
  res.hat_spectrum = anh.spectrum;
  const Deflation dfl = deflate_common_nullspace(pb.pair, tols.rank_tol);
  res.definiteness = definiteness_interval(dfl.reduced, tols, opts.definiteness);
  res.hat_definiteness = definiteness_interval(pb.hat_pair, tols, opts.definiteness);
  const DefinitenessReport& d = res.definiteness;
  const DefinitenessReport& dh = res.hat_definiteness;

  auto neg_inf = [&](NegReason r, const std::string& why) {
    res.verdict = Verdict::NegInfinite;
    res.reason = r;
    res.value = -kInf;
    res.detail = why;
    return res;
  };

  bool mirror = false;
  if (d.is_psd_pair && dh.is_psd_pair) {
    res.sign_case = SignCase::PsdPairs;
  } else if (d.is_nsd_pair && dh.is_nsd_pair) {
    res.sign_case = SignCase::NsdPairs;
    mirror = true;
  } else {
    if (an.spectrum.infinite_definite_sign == InfiniteSign::Coupled) {
      return neg_inf(NegReason::CoupledInfiniteStructure,
                     "A restricted to the nullspace of B is singular after deflation");
    }
    if (an.spectrum.nonreal_count > 0 || anh.spectrum.nonreal_count > 0) {
      return neg_inf(NegReason::ComplexEigenvalues, "a pair has nonreal eigenvalues");
    }
    const bool semi = d.is_psd_pair || d.is_nsd_pair;
    const bool semih = dh.is_psd_pair || dh.is_nsd_pair;
    if (semi && semih) {
      return neg_inf(NegReason::MixedSigns, "the pairs are semidefinite with opposite orientations");
    }
    return neg_inf(NegReason::NotSemidefinitePair, "a pair is not semidefinite");
  }

  const TypedSpectrum S = mirror ? mirrored(an.spectrum) : an.spectrum;
  const TypedSpectrum Sh = mirror ? mirrored(anh.spectrum) : anh.spectrum;
  const Inertia iB = mirror ? swapped(res.inertia_B) : res.inertia_B;
  const Inertia iBh = mirror ? swapped(res.inertia_Bhat) : res.inertia_Bhat;

  // Directions in N(B) carry the A-form freely; the hat matrix must not
  // pull against it.
  if (an.null_basis.cols() > 0) {
    const Mat Ahm = mirror ? Mat(-pb.hat_pair.A.mat()) : pb.hat_pair.A.mat();
    const RVec ev = eigh(Ahm).values;
    const double sc = 1.0 + ev.cwiseAbs().maxCoeff();
    if (ev(0) < -tols.psd_tol * sc) {
      return neg_inf(NegReason::MixedSigns,
                     "the nullspace of B carries A-definite directions against the sign of Ahat");
    }
  }

  const PropernessReport pr = properness(iB, Sh, iBh, tols.psd_tol);
  res.properness = pr;
  if (!pr.is_proper) {
    return neg_inf(NegReason::Improper, "the triplet (B, Ahat, Bhat) is improper");
  }

  res.terms = closed_form_terms(S, Sh, iBh, pr);
  double v = 0.0;
  for (const Term& t : res.terms) v += t.product;
  res.verdict = Verdict::Finite;
  res.value = v;
  const bool diag = an.diagonalizable && anh.diagonalizable && !has_jordan(S) && !has_jordan(Sh);
  res.attainable = diag ? Attainable::Yes : Attainable::Unknown;
  return res;
}

double trace_objective(const ProblemInstance& pb, const Mat& X) {
  return (pb.hat_pair.A.mat() * X.adjoint() * pb.pair.A.mat() * X).trace().real();
}

double feasibility_residual(const ProblemInstance& pb, const Mat& X) {
  const Eigen::Index nh = pb.n_hat();
  return (pb.hat_pair.B.mat() * X.adjoint() * pb.pair.B.mat() * X - Mat::Identity(nh, nh)).norm();
}

MinimizerResult minimizer(const ProblemInstance& pb, const InfimumOptions& opts) {
  MinimizerResult out;
  out.infimum = infimum(pb, opts);
  const InfimumResult& r = out.infimum;
  const ToleranceSet& tols = pb.tolerances;
  if (r.verdict == Verdict::ExcludedConstant) {
    const FeasibleFrame fr = feasible_frame(pb.pair.B.mat(), pb.hat_pair.B.mat(), tols.rank_tol);
    Rng rng(0);
    out.X = sample_original(fr, 0.0, 0.0, rng);
  } else {
    if (r.verdict != Verdict::Finite || r.attainable != Attainable::Yes) {
      throw Error(ErrorKind::NotAttainable, "the infimum is not known to be attained");
    }
    const bool mirror = r.sign_case == SignCase::NsdPairs;
    const PencilAnalysis an = analyze_pencil(pb.pair, tols);
    const PencilAnalysis anh = analyze_pencil(pb.hat_pair, tols);
    // Types in the mirrored frame are swapped back to original lists.
    auto pick = [&](const PencilAnalysis& a, bool pos_in_frame, int idx) -> const Vec& {
      const bool orig_pos = pos_in_frame != mirror;
      return orig_pos ? a.pos_vectors.at(idx) : a.neg_vectors.at(idx);
    };
    const Eigen::Index n = pb.n(), nh = pb.n_hat();
    Mat Xt(n, nh), Zh(nh, nh);
    Eigen::Index c = 0;
    for (const Term& t : r.terms) {
      Xt.col(c) = pick(an, t.positive_type, t.index);
      Zh.col(c) = pick(anh, t.positive_type, t.hat_index);
      ++c;
    }
    if (c != nh) throw Error(ErrorKind::KernelFailure, "term count differs from the hat order");
    // With Zh^H Bhat Zh = Jhat and Xt^H B Xt = Jhat, X = Xt Zh^H is feasible.
    out.X = Xt * Zh.adjoint();
  }
  out.achieved = trace_objective(pb, out.X);
  out.feasibility_residual = feasibility_residual(pb, out.X);
  return out;
}

double fan_min_product(std::vector<double> l0, std::vector<double> l1) {
  if (l0.size() != l1.size()) {
    throw Error(ErrorKind::LengthMismatch, "lists have different lengths");
  }
  std::sort(l0.begin(), l0.end(), std::greater<double>());
  std::sort(l1.begin(), l1.end());
  double s = 0.0;
  for (size_t i = 0; i < l0.size(); ++i) s += l0[i] * l1[i];
  return s;
}

}  // namespace tracemin
