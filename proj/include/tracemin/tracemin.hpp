// Finiteness verdict, closed-form infimum and minimizers for
// inf trace(Ahat X^H A X) subject to Bhat X^H B X = I.
#pragma once

#include "tracemin/definiteness.hpp"
#include "tracemin/matcore.hpp"
#include "tracemin/spectral.hpp"

#include <optional>
#include <vector>

namespace tracemin {

enum class CaseLabel { I, II, III, IV, Improper };
const char* to_string(CaseLabel c);

struct PropernessReport {
  bool is_proper = false;
  CaseLabel case_label = CaseLabel::Improper;
  int d_plus = 0;
  int d_minus = 0;
};

enum class ExcludedKind { AhatZero, AEqualsMuB, AhatEqualsMuhatBhat };
const char* to_string(ExcludedKind k);

struct ExcludedCase {
  ExcludedKind which = ExcludedKind::AhatZero;
  double mu = 0.0;
  double constant = 0.0;
};

enum class Verdict { Finite, NegInfinite, ExcludedConstant };
enum class SignCase { None, PsdPairs, NsdPairs };
enum class NegReason {
  None,
  NotSemidefinitePair,
  MixedSigns,
  Improper,
  CoupledInfiniteStructure,
  ComplexEigenvalues,
};
enum class Attainable { Yes, Unknown };

const char* to_string(Verdict v);
const char* to_string(SignCase s);
const char* to_string(NegReason r);
const char* to_string(Attainable a);

// One product of the closed form. Indices address the ascending typed
// lists of the (possibly mirrored) spectra; `positive_type` is the type in
// that frame.
struct Term {
  int group = 0;  // 1..4, the four sums in order
  bool positive_type = true;
  int hat_index = 0;
  int index = 0;
  double hat_value = 0.0;
  double value = 0.0;
  double product = 0.0;
};

struct InfimumResult {
  Verdict verdict = Verdict::Finite;
  double value = 0.0;
  SignCase sign_case = SignCase::None;
  NegReason reason = NegReason::None;
  std::vector<Term> terms;
  Attainable attainable = Attainable::Unknown;
  std::optional<ExcludedCase> excluded;
  std::optional<PropernessReport> properness;
  TypedSpectrum spectrum;      // of (A, B)
  TypedSpectrum hat_spectrum;  // of (Ahat, Bhat)
  DefinitenessReport definiteness;
  DefinitenessReport hat_definiteness;
  Inertia inertia_B;
  Inertia inertia_Bhat;
  std::string detail;
};

struct InfimumOptions {
  DefinitenessOptions definiteness;
};

// Throws EmptyFeasibleSet when Bhat is singular or its inertia exceeds B's.
void check_feasible(const ProblemInstance& problem);

std::optional<ExcludedCase> check_excluded(const ProblemInstance& problem);

// (Ahat, Bhat) is assumed positive semidefinite with Bhat nonsingular.
// Throws InertiaViolation.
PropernessReport properness(const Inertia& inertia_B, const TypedSpectrum& hat_spectrum,
                            const Inertia& inertia_Bhat, double tol = 1e-8);

// Ahat -> diag(Ahat, 0), Bhat -> diag(Bhat, J_c) with J_c filling the
// inertia of B. When B is singular the padded order is rank(B).
ProblemInstance pad_problem(const ProblemInstance& problem);

InfimumResult infimum(const ProblemInstance& problem, const InfimumOptions& opts = {});

struct MinimizerResult {
  Mat X;
  double achieved = 0.0;
  double feasibility_residual = 0.0;
  InfimumResult infimum;
};

// Throws NotAttainable unless the verdict is Finite with attainable Yes
// (or an excluded constant, where any feasible point attains it).
MinimizerResult minimizer(const ProblemInstance& problem, const InfimumOptions& opts = {});

// sum_i l0 descending[i] * l1 ascending[i]. Throws LengthMismatch.
double fan_min_product(std::vector<double> lambda0, std::vector<double> lambda1);

double trace_objective(const ProblemInstance& problem, const Mat& X);
double feasibility_residual(const ProblemInstance& problem, const Mat& X);

}  // namespace tracemin
