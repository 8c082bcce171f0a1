// Semidefiniteness of a Hermitian pair through f(s) = lambda_min(A - s B).
#pragma once

#include "tracemin/matcore.hpp"

#include <optional>
#include <utility>

namespace tracemin {

struct DefinitenessOptions {
  int max_iter = 200;
  double overflow_cap = 0.0;  // 0 selects max(1/rank_tol, 4(1+rho))
};

struct DefinitenessReport {
  bool is_psd_pair = false;
  bool is_nsd_pair = false;
  // Endpoints may be infinite when one side of the bracket never turns down.
  std::optional<std::pair<double, double>> psd_interval;
  std::optional<std::pair<double, double>> nsd_interval;
  double max_fmin = 0.0;
  double argmax_shift = 0.0;
  double nsd_max = 0.0;  // max over s of -lambda_max(A - s B)
  double nsd_argmax = 0.0;
  bool bracket_overflow = false;
  double scale = 1.0;  // 1 + ||A|| + ||B||
};

double lambda_min_shift(const MatrixPair& pair, double shift);
double lambda_min_shift(const Mat& A, const Mat& B, double shift);

DefinitenessReport definiteness_interval(const MatrixPair& pair, const ToleranceSet& tols,
                                         const DefinitenessOptions& opts = {});

// One-sided search on raw matrices: is there s with A - s B >= 0?
struct ShiftSearch {
  bool found = false;
  double lo = 0.0;
  double hi = 0.0;
  double max_f = 0.0;
  double argmax = 0.0;
  bool overflow = false;
  double scale = 1.0;
};

ShiftSearch psd_shift_search(const Mat& A, const Mat& B, const ToleranceSet& tols,
                             const DefinitenessOptions& opts = {});

}  // namespace tracemin
