// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "stablesde/drift.hpp"
#include "stablesde/stable.hpp"
#include "stablesde/types.hpp"

namespace stablesde {

// Step-size policy: dt(t) = min(max(dt0, kappa*t), dt_max); kappa = 0 gives a
// fixed step. Steps are clipped so that record-grid times and jump times are
// hit exactly (no interpolation; recorded values follow the cadlag convention).
struct DtPolicy {
  double dt0 = 0.01;
  double kappa = 0.0;
  double dt_max = std::numeric_limits<double>::infinity();
};

struct SimConfig {
  double x_init = 1.0;
  double T = 1.0;
  DtPolicy dt;

  enum class Scheme { ExactIncrement, JumpAdapted };
  Scheme scheme = Scheme::ExactIncrement;

  // JumpAdapted options
  double epsilon = 0.01;
  bool small_jump_surrogate = true;  // Gaussian surrogate for the |u|<=eps jumps
  bool record_ledger = false;        // store (time, size, x_pre) of every large jump
  bool record_ito = false;           // full drift/stoch/remainder trace at the grid
  bool record_remainder = false;     // remainder + running sup only (cheap)

  std::vector<double> record_grid;  // increasing, within [0,T]

  // Diagnostic: per window [lo,hi], max over retained jumps of
  // |u| / s^(1/alpha + jump_ratio_delta).
  std::vector<std::pair<double, double>> jump_ratio_windows;
  double jump_ratio_delta = 0.1;

  int n_paths = 1;
  std::uint64_t master_seed = 0;
  int threads = 0;  // 0 -> hardware concurrency

  // test hooks
  bool noise_off = false;
  bool drift_off = false;
};

// x + f(x) dt + increment (explicit Euler update).
double euler_step(double x, const DriftSpec& spec, double dt, double increment);

// Euler path with exact stable increments per step. The RNG substream is
// keyed (master_seed, "path", path_index) so any path is reproducible in
// isolation.
PathRecord simulate_path(const DriftSpec& spec, const StableParams& params,
                         const SimConfig& config, std::uint64_t path_index);

// Jump-adapted path: jumps with |u| > epsilon at their exact Poisson times,
// Euler steps with compensator drift and (optionally) the Gaussian
// small-jump surrogate in between.
PathRecord simulate_path_jump_adapted(const DriftSpec& spec, const StableParams& params,
                                      const SimConfig& config, std::uint64_t path_index);

struct EnsembleResult {
  std::vector<PathRecord> paths;
  std::vector<std::size_t> diverged;  // indices of paths flagged non-finite
  std::uint64_t total_steps = 0;
  std::uint64_t total_jumps = 0;
  double wall_ms = 0.0;  // timing only; excluded from determinism claims
};

// Embarrassingly parallel over paths; the result is a deterministic function
// of the config (master_seed included) for every worker count.
EnsembleResult run_ensemble(const DriftSpec& spec, const StableParams& params,
                            const SimConfig& config);

}  // namespace stablesde
