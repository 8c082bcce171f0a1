// Ground-truth Hermitian pairs assembled from canonical block types.
#pragma once

#include "tracemin/matcore.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tracemin {

enum class BlockKind { To, Ts, Tinf, Tc, Tr };
const char* to_string(BlockKind k);

struct BlockSpec {
  BlockKind kind = BlockKind::Tr;
  int p = 1;
  double alpha = 0.0;
  double beta = 0.0;
  int eta = 1;

  static BlockSpec To() { return {BlockKind::To, 1, 0.0, 0.0, 1}; }
  static BlockSpec Ts(int p) { return {BlockKind::Ts, p, 0.0, 0.0, 1}; }
  static BlockSpec Tinf(int p, int eta) { return {BlockKind::Tinf, p, 0.0, 0.0, eta}; }
  static BlockSpec Tc(int p, double alpha, double beta) { return {BlockKind::Tc, p, alpha, beta, 1}; }
  static BlockSpec Tr(int p, double alpha, int eta) { return {BlockKind::Tr, p, alpha, 0.0, eta}; }

  int order() const;
};

struct ExpectedValue {
  double value;
  bool positive_type;
  bool jordan_pair;
};

struct GroundTruth {
  Inertia inertia_B;
  std::vector<double> pos;  // ascending; finite real eigenvalues of positive type
  std::vector<double> neg;  // ascending
  int jordan_pairs = 0;
  int complex_count = 0;    // nonreal eigenvalues, counted with multiplicity
  int deflated_dims = 0;
  bool psd = false;
  bool nsd = false;
  bool diagonalizable = false;
  // Typed values are only listed when the pair is semidefinite; otherwise
  // the typing of higher Jordan blocks is not defined here.
  bool typed_values_defined = false;
};

// K_p(tau): tau on the anti-diagonal i+j = p-1, ones on i+j = p.
Mat k_template(int p, cplx tau);
// Anti-identity of order p.
Mat f_template(int p);

// Throws InvalidSpec.
MatrixPair block(const BlockSpec& spec);
// Tc(p) in the congruent form with real diagonal B = diag(F_p, -F_p).
MatrixPair block_tc_diagonal_b(const BlockSpec& spec);

MatrixPair direct_sum(const std::vector<BlockSpec>& specs);
GroundTruth ground_truth(const std::vector<BlockSpec>& specs, double rank_tol = 1e-10);

struct Assembly {
  MatrixPair pair;
  GroundTruth truth;
  Mat Y;
};

// Direct sum followed by random_congruence. Throws InvalidSpec.
Assembly assemble(const std::vector<BlockSpec>& specs, std::uint64_t scramble_seed,
                  double conditioning_cap);

}  // namespace tracemin
