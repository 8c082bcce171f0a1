// Core matrix types, validation, inertia and congruence helpers.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace tracemin {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Rng = std::mt19937_64;

enum class ErrorKind {
  InvalidInput,
  NotSquare,
  NotHermitian,
  KernelFailure,
  NotDiagonalizable,
  IllConditioned,
  InertiaViolation,
  EmptyFeasibleSet,
  NotAttainable,
  LengthMismatch,
  NotJUnitary,
  DegenerateInput,
  NoWitnessConstructible,
  CertificationFailed,
  InvalidSpec,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct ToleranceSet {
  double herm_tol = 1e-10;
  double rank_tol = 1e-10;
  double psd_tol = 1e-8;
  double type_tol = 1e-7;
  double feas_tol = 1e-8;
};

// Dense Hermitian matrix. Entries are stored symmetrized.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  int n() const { return static_cast<int>(m_.rows()); }
  const Mat& mat() const { return m_; }
  double herm_residual() const { return residual_; }

  // Symmetrizes without checking; for internally produced matrices.
  static HermitianMatrix from_trusted(const Mat& m);

 private:
  friend HermitianMatrix validate_hermitian(const Mat& raw, double herm_tol);
  Mat m_;
  double residual_ = 0.0;
};

struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  int n() const { return n_plus + n_zero + n_minus; }
  bool operator==(const Inertia&) const = default;
};

struct MatrixPair {
  HermitianMatrix A;
  HermitianMatrix B;

  MatrixPair() = default;
  MatrixPair(HermitianMatrix a, HermitianMatrix b);
  int n() const { return A.n(); }
};

struct ProblemInstance {
  MatrixPair pair;
  MatrixPair hat_pair;
  ToleranceSet tolerances;

  ProblemInstance() = default;
  ProblemInstance(MatrixPair p, MatrixPair hp, ToleranceSet tols = {});

  int n() const { return pair.n(); }
  int n_hat() const { return hat_pair.n(); }
};

// Throws NotSquare or NotHermitian.
HermitianMatrix validate_hermitian(const Mat& raw, double herm_tol);

// Eigenvalues with |lambda| <= rank_tol * max|lambda| count as zero.
Inertia inertia(const HermitianMatrix& M, double rank_tol);
Inertia inertia(const Mat& M, double rank_tol);

struct Congruence {
  MatrixPair pair;
  Mat Y;
};

// Returns (Y^H A Y, Y^H B Y) for Y = U * D with U Haar unitary and D
// log-uniform in [1/sqrt(cap), sqrt(cap)], so cond(Y) <= cap.
Congruence random_congruence(const MatrixPair& pair, std::uint64_t seed,
                             double conditioning_cap);

// Utilities shared by the other modules.
Mat herm_part(const Mat& m);
double spectral_norm(const Mat& m);
Mat haar_unitary(int n, Rng& rng);
Mat gaussian_matrix(int rows, int cols, Rng& rng);
MatrixPair pair_of(const Mat& A, const Mat& B);

}  // namespace tracemin
