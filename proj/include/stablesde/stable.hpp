// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>

#include "stablesde/rng.hpp"
#include "stablesde/types.hpp"

namespace stablesde {

// Strictly alpha-stable noise parameterized by its Levy measure
//   (c_plus 1{u>0} + c_minus 1{u<0}) |u|^(-1-alpha) du,  alpha in (0,2)\{1}.
// skew and unit_scale are derived: skew = (c+ - c-)/(c+ + c-), and unit_scale
// is the scale sigma of B_alpha(1) in the S(alpha, skew, sigma; 1)
// parameterization, E exp(i theta B_alpha(1)) =
//   exp(-sigma^alpha |theta|^alpha (1 - i skew sgn(theta) tan(pi alpha/2))).
struct StableParams {
  double alpha = 0;
  double c_plus = 0;
  double c_minus = 0;
  double skew = 0;
  double unit_scale = 0;
};

// Validates the inputs and cross-checks the closed-form Levy-measure-to-scale
// mapping against the numerical Levy-Khintchine oracle on a fixed theta grid;
// throws std::invalid_argument / std::runtime_error on failure.
StableParams make_stable_params(double alpha, double c_plus, double c_minus);

// Closed-form CF exponent psi(theta) with E exp(i theta B_alpha(t)) = exp(t psi).
std::complex<double> cf_exponent_closed(double theta, const StableParams& params);

// Numerical oracle for psi(theta): adaptive quadrature of the Levy-Khintchine
// integrand, split at u = 0 and |u| = 1. The compensation term -i theta u is
// present only for alpha > 1 (strict stability).
std::complex<double> cf_exponent_numeric(double theta, const StableParams& params,
                                         double rel_tol = 1e-8);

// One exact increment distributed as B_alpha(dt) (Chambers-Mallows-Stuck).
double sample_stable_increment(const StableParams& params, double dt, RngStream& rng);

// Cumulative sums of exact increments over a strictly increasing grid
// starting at 0; the path value at time 0 is 0.
PathRecord sample_stable_path(const StableParams& params, std::span<const double> grid,
                              RngStream& rng);

// Poisson sampling of the jumps with |u| > epsilon over [0, T]: times from
// exponential gaps at rate (c+ + c-) eps^(-alpha)/alpha, sizes from the
// normalized tail density.
JumpLedger sample_large_jumps(const StableParams& params, double epsilon, double T,
                              RngStream& rng);

struct SmallJumpMoments {
  // integral of u^2 over |u| <= eps against the Levy measure, per unit time
  double variance_rate = 0;
  // drift rate the jump-adapted scheme adds between large jumps:
  // (c+ - c-) eps^(1-alpha)/(1-alpha). For alpha > 1 this equals minus the
  // large-jump compensator; for alpha < 1 it is the mean rate of the dropped
  // small jumps.
  double compensator_rate = 0;
};
SmallJumpMoments small_jump_moments(const StableParams& params, double epsilon);

}  // namespace stablesde
