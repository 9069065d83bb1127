// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>

namespace stablesde {

enum class DriftFamily { PurePower, SmoothPower };

// Drift families with power asymptotics f(x) ~ a x^beta as x -> +inf, beta < 1,
// together with the space transform g(x) = int_{x0}^x dz/f(z) and its
// extension to the whole line (0 on (-inf,0], a C^2 quintic bridge on (0,x0)).
//
//   PurePower:   f(x) = a x^beta for x >= x0, blended below x0 to the
//                constant a x0^beta / 2 so that f stays C^1 and bounded away
//                from zero; g on [x0,inf) is closed form.
//   SmoothPower: f(x) = a (1+x^2)^(beta/2), globally smooth and positive;
//                g on [x0,inf) is adaptive quadrature of 1/f, cached on a
//                fixed log grid with Hermite interpolation between nodes.
class DriftSpec {
 public:
  static DriftSpec pure_power(double a, double beta, double x0);
  static DriftSpec smooth_power(double a, double beta, double x0);

  struct FVal {
    double f;
    double f_prime;
  };
  FVal eval_f(double x) const;

  struct GVal {
    double g;
    double g_prime;
  };
  GVal eval_g(double x) const;

  // Uncached quadrature route for g at x >= x0 (cross-check path; closed form
  // for PurePower).
  double g_direct(double x, double rel_tol = 1e-10) const;

  DriftFamily family() const { return family_; }
  double a() const { return a_; }
  double beta() const { return beta_; }
  double x0() const { return x0_; }

 private:
  DriftSpec(DriftFamily fam, double a, double beta, double x0);

  struct GCache;
  DriftFamily family_;
  double a_, beta_, x0_;
  double g_x0_prime_, g_x0_second_;  // right limits at x0, used by the bridge
  std::shared_ptr<GCache> cache_;    // SmoothPower only
};

struct HypothesesReport {
  bool strong_law_valid = false;     // beta in (1-alpha, 1)
  bool clt_valid = false;            // beta in (1-alpha, 1/(1+alpha))
  bool counterexample_regime = false;  // beta > 1/(1+alpha)
  bool assumption2_sufficient = false;
};

// Parameter-window check; alpha must lie in (0,2)\{1}. c_plus enters only
// through the escape-to-infinity sufficient condition for alpha < 1.
HypothesesReport check_theorem_hypotheses(const DriftSpec& spec, double alpha,
                                          double c_plus = 1.0);

}  // namespace stablesde
