// Eigendecompositions, common-nullspace deflation, typed pencil spectra
// and congruent diagonalization.
#pragma once

#include "tracemin/matcore.hpp"

#include <vector>

namespace tracemin {

struct EighResult {
  RVec values;  // ascending
  Mat vectors;  // orthonormal columns
};

EighResult eigh(const HermitianMatrix& H);
EighResult eigh(const Mat& H);

struct Deflation {
  MatrixPair reduced;
  Mat basis;  // orthonormal basis of the removed common nullspace (n x k)
  Mat keep;   // orthonormal basis of its complement (n x (n-k))
  int deflated_dims = 0;
};

Deflation deflate_common_nullspace(const MatrixPair& pair, double rank_tol);

enum class EigType { Positive, Negative };

struct TypedEigenvalue {
  double value = 0.0;
  EigType eig_type = EigType::Positive;
  double b_form = 0.0;  // x^H B x of the unit-norm eigenvector
  bool jordan_pair = false;
};

enum class InfiniteSign { None, Plus, Minus, Mixed, Coupled };
const char* to_string(InfiniteSign s);

// Which computation produced the finite part of the spectrum.
enum class SpectrumRoute { Empty, PositiveSemidefinite, NegativeSemidefinite, General, Skipped };
const char* to_string(SpectrumRoute r);

struct TypedSpectrum {
  std::vector<TypedEigenvalue> pos;  // ascending
  std::vector<TypedEigenvalue> neg;  // ascending
  int deflated_dims = 0;
  InfiniteSign infinite_definite_sign = InfiniteSign::None;
  int nonreal_count = 0;    // eigenvalues with nonzero imaginary part
  int isotropic_count = 0;  // real eigenvalues with isotropic eigenvectors outside the semidefinite case
  SpectrumRoute route = SpectrumRoute::Empty;
  bool complete = true;     // false when coupled infinite structure blocks the finite part
};

// Spectrum of (-A, -B): same values with types exchanged.
TypedSpectrum mirrored(const TypedSpectrum& s);

struct ComplexEigenPair {
  cplx mu;  // Im(mu) > 0
  Vec x;    // A x = mu B x
  Vec y;    // A y = conj(mu) B y, scaled so that x^H B y = 1
};

// Everything computed while typing a pencil, including the vectors needed
// to build minimizers and divergence witnesses. Vectors are in the
// original coordinates; non-Jordan eigenvectors satisfy |x^H B x| = 1.
struct PencilAnalysis {
  TypedSpectrum spectrum;
  std::vector<Vec> pos_vectors;
  std::vector<Vec> neg_vectors;
  std::vector<ComplexEigenPair> complex_pairs;
  Mat deflated_basis;     // common nullspace of A and B
  Mat null_basis;         // B-nullspace after deflation, orthonormal
  RVec infinite_values;   // eigenvalues of A compressed to null_basis
  Mat infinite_vectors;   // unit vectors in null_basis span diagonalizing that compression
  bool diagonalizable = true;
};

PencilAnalysis analyze_pencil(const MatrixPair& pair, const ToleranceSet& tols);

TypedSpectrum typed_spectrum(const MatrixPair& pair, const ToleranceSet& tols);

struct CongruentDiagonalization {
  Mat Y;
  RVec J;       // +1 entries, then -1, then 0
  RVec Lambda;
  double residual_B = 0.0;  // ||Y^H J Y - B||
  double residual_A = 0.0;  // ||Y^H Lambda Y - A||
};

// Throws NotDiagonalizable or IllConditioned.
CongruentDiagonalization congruent_diagonalize(const MatrixPair& pair, const ToleranceSet& tols);
CongruentDiagonalization congruent_diagonalize(const MatrixPair& pair, const PencilAnalysis& an,
                                               const ToleranceSet& tols);

}  // namespace tracemin
