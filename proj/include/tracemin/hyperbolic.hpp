// J-unitary toolkit: hyperbolic polar form, ChSh factors, feasible-point
// sampling and J-orthonormal basis completion.
#pragma once

#include "tracemin/matcore.hpp"

namespace tracemin {

// J = diag(I_{n_plus}, -I_{n_minus}).
struct SignatureJ {
  int n_plus = 0;
  int n_minus = 0;

  int n() const { return n_plus + n_minus; }
  RVec diag() const;
  Mat mat() const;
};

struct ChShFactors {
  Mat U_plus, U_minus, V_plus, V_minus;
  RVec sigma;  // descending, length min(n_plus, n_minus)

  // diag(U+, U-) * [[C, S], [S^T, C']] * diag(V+, V-)
  Mat reassemble() const;
};

// [[(I+WW^H)^{1/2}, W], [W^H, (I+W^HW)^{1/2}]] * diag(V+, V-).
Mat polar_from_W(const Mat& W, const Mat& V_plus, const Mat& V_minus);

// Throws NotJUnitary when ||X^H J X - J|| > tol.
ChShFactors chsh_decompose(const Mat& X, const SignatureJ& J, double tol);

Mat sample_j_unitary(const SignatureJ& J, double spread, Rng& rng);

// n x n_hat with X^H J X = Jhat. Throws InertiaViolation.
Mat sample_feasible(const SignatureJ& J, const SignatureJ& Jhat, double spread, Rng& rng);

// Appends columns so the result is J-unitary up to column order: the
// positive-form columns of the completion come first. Throws DegenerateInput.
Mat complete_j_basis(const Mat& X_partial, const RVec& Jdiag, double tol);

// Maps a canonical feasible point into original coordinates of a problem
// with B possibly singular and Bhat nonsingular.
struct FeasibleFrame {
  Mat F;      // n x r, F^H B F = J_B (positive columns first)
  Mat N;      // n x (n - r), orthonormal basis of N(B)
  Mat M;      // n_hat x n_hat, M^H Jhat M = Bhat^{-1}
  SignatureJ J;
  SignatureJ Jhat;
};

// Throws EmptyFeasibleSet when Bhat is singular or its inertia exceeds that of B.
FeasibleFrame feasible_frame(const Mat& B, const Mat& Bhat, double rank_tol);

// X = F G M + N R with G from sample_feasible and R Gaussian * null_spread.
Mat sample_original(const FeasibleFrame& fr, double spread, double null_spread, Rng& rng);

}  // namespace tracemin
