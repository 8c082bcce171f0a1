// Feasible families X(t) whose objective diverges to -infinity.
#pragma once

#include "tracemin/matcore.hpp"
#include "tracemin/tracemin.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tracemin {

enum class WitnessKind { MixedSignSlope, ComplexBlockSlope, InfiniteBlockRay, CoupledRay };
const char* to_string(WitnessKind k);

// How the parameter enters X(t).
//  Quadratic: block core with s = t, trace = slope t^2 + offset.
//  Cross:     block core with s sqrt(1+s^2) = t^2, trace = slope t^2 + offset.
//  Linear:    X = X_fixed + t D, trace = slope t^2 + offset.
//  Squared:   X = X_fixed + t^2 D, trace = slope t^2 + offset + O(t^4 eps).
enum class WitnessMode { Quadratic, Cross, Linear, Squared };
const char* to_string(WitnessMode m);

struct WitnessFamily {
  WitnessKind kind = WitnessKind::MixedSignSlope;
  WitnessMode mode = WitnessMode::Quadratic;
  ProblemInstance problem;

  // Block families: X(t) = X_fixed + frame * core(t) * hat_frame^H, where
  // frame^H B frame = diag(1,-1) and hat_frame^H Bhat hat_frame = diag of
  // hat_frame_J. The core is the 2 x k slice `hat_cols` of
  // diag(1, e^{i phi}) [[c, s], [s, c]] diag(1, e^{-i phi_hat}).
  Mat frame;
  Mat hat_frame;
  RVec hat_frame_J;
  std::vector<int> hat_cols;
  double phi = 0.0;
  double phi_hat = 0.0;

  // Ray families.
  Mat direction;

  Mat X_fixed;
  double slope = 0.0;
  double offset = 0.0;
  std::string selectors;  // human-readable description of the chosen data
};

struct WitnessOptions {
  std::uint64_t seed = 1;
};

// Throws NoWitnessConstructible.
WitnessFamily build_witness(const ProblemInstance& problem, const InfimumResult& diag,
                            const WitnessOptions& opts = {});

struct WitnessPoint {
  Mat X;
  double trace_value = 0.0;
  double trend_value = 0.0;
  double residual = 0.0;  // ||Bhat X^H B X - I||_F
};

WitnessPoint evaluate_witness(const WitnessFamily& family, double t);

struct Certification {
  double t = 0.0;
  double trace_value = 0.0;
  double residual = 0.0;
  double residual_bound = 0.0;
};

// Throws CertificationFailed.
Certification certify_unbounded(const WitnessFamily& family, double threshold, double t_max);

}  // namespace tracemin
