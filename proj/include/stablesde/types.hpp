// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

namespace stablesde {

// Jumps of the driving noise above a fixed threshold, in time order.
struct JumpLedger {
  double threshold = 0.0;
  std::vector<double> times;
  std::vector<double> sizes;
  // State immediately before each jump; filled by the SDE engine, empty for
  // ledgers produced by the bare jump sampler.
  std::vector<double> x_pre;
};

// Running decomposition of g(X(t)) - g(X(0)), aligned with PathRecord::times.
// remainder_sup[i] is the exact running sup of |remainder| over [0, times[i]],
// tracked at every jump, not just at recorded instants.
struct ItoTrace {
  std::vector<double> drift_term;
  std::vector<double> stoch_term;
  std::vector<double> remainder_term;
  std::vector<double> remainder_sup;
};

// A sample path on a time grid (cadlag convention: values are the state at
// the recorded instant, jumps included).
struct PathRecord {
  std::vector<double> times;
  std::vector<double> values;
  std::optional<JumpLedger> ledger;
  std::optional<ItoTrace> ito;
  // max of |u| / s^(1/alpha + delta) over retained jumps per diagnostic window
  std::vector<double> window_jump_ratio;
  bool diverged = false;
};

}  // namespace stablesde
