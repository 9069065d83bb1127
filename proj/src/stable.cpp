// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#include "stablesde/stable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stablesde/quadrature.hpp"

namespace stablesde {

namespace {

constexpr double kPi = std::numbers::pi;

// sigma^alpha = C(alpha) * (c+ + c-), with
// C(alpha) = -Gamma(-alpha) cos(pi alpha / 2) = Gamma(2-alpha) cos(pi alpha/2) / (alpha (1-alpha)),
// the second form having no pole inside (0,2)\{1}.
double scale_constant(double alpha) {
  return std::tgamma(2.0 - alpha) * std::cos(0.5 * kPi * alpha) / (alpha * (1.0 - alpha));
}

// One-sided Levy-Khintchine integral for theta > 0 and unit intensity:
//   Phi(theta) = int_0^inf (e^{i theta u} - 1 - i theta u 1{alpha>1}) u^{-1-alpha} du.
// Split at u = 1. On (0,1] the integrable singularity is removed by
// subtracting the Taylor terms analytically. On [1,inf) the oscillatory
// e^{i theta u} piece is rotated onto the ray u = 1 + iy where it decays like
// e^{-theta y}; the rotated integral is evaluated on [0,1] plus [1,inf) with
// the substitution y -> 1/v. The -1 and -i theta u tail pieces are exact.
std::complex<double> one_sided_exponent(double theta, double alpha, double rel_tol) {
  using C = std::complex<double>;
  const C i_unit{0.0, 1.0};

  // regular part on (0,1]: integrand m(u) u^{-1-alpha}, m(u) = O(u^3)
  auto regular = [&](double u) -> C {
    const C m = std::exp(i_unit * (theta * u)) - 1.0 - i_unit * (theta * u) +
                0.5 * theta * theta * u * u;
    return m * std::pow(u, -1.0 - alpha);
  };
  const auto near = adaptive_gk15<C>(regular, 0.0, 1.0, rel_tol, 1e-14);

  // rotated tail G = int_0^inf e^{-theta y} (1+iy)^{-1-alpha} dy
  auto rotated = [&](double y) -> C {
    return std::exp(-theta * y) * std::pow(C{1.0, y}, -1.0 - alpha);
  };
  auto rotated_inv = [&](double v) -> C {
    if (v <= 0.0) return {0.0, 0.0};
    const double y = 1.0 / v;
    return rotated(y) / (v * v);
  };
  const auto tail_a = adaptive_gk15<C>(rotated, 0.0, 1.0, rel_tol, 1e-14);
  const auto tail_b = adaptive_gk15<C>(rotated_inv, 0.0, 1.0, rel_tol, 1e-14);
  const C e_tail = i_unit * std::exp(i_unit * theta) * (tail_a.value + tail_b.value);

  C phi = near.value + e_tail - 1.0 / alpha;
  if (alpha > 1.0) {
    // near piece: restore the subtracted u^2 Taylor term
    phi += -0.5 * theta * theta / (2.0 - alpha);
    // tail piece: analytic integral of -i theta u
    phi += -i_unit * theta / (alpha - 1.0);
  } else {
    // no compensation: restore both subtracted Taylor terms on (0,1]
    phi += i_unit * theta / (1.0 - alpha) - 0.5 * theta * theta / (2.0 - alpha);
  }
  return phi;
}

void validate_inputs(double alpha, double c_plus, double c_minus) {
  if (!(alpha > 0.0) || !(alpha < 2.0))
    throw std::invalid_argument("stable params: alpha must lie in (0,2), got " +
                                std::to_string(alpha));
  if (alpha == 1.0)
    throw std::invalid_argument("stable params: alpha = 1 is excluded");
  if (c_plus < 0.0 || c_minus < 0.0)
    throw std::invalid_argument("stable params: jump intensities must be nonnegative");
  if (!(c_plus + c_minus > 0.0))
    throw std::invalid_argument("stable params: c_plus + c_minus must be positive");
}

}  // namespace

std::complex<double> cf_exponent_closed(double theta, const StableParams& params) {
  if (theta == 0.0) return {0.0, 0.0};
  const double at = std::pow(std::fabs(theta), params.alpha);
  const double s = std::pow(params.unit_scale, params.alpha);
  const double re = -s * at;
  const double im = s * at * params.skew * ((theta > 0) ? 1.0 : -1.0) *
                    std::tan(0.5 * kPi * params.alpha);
  return {re, im};
}

std::complex<double> cf_exponent_numeric(double theta, const StableParams& params,
                                         double rel_tol) {
  if (theta == 0.0) return {0.0, 0.0};
  const std::complex<double> phi =
      one_sided_exponent(std::fabs(theta), params.alpha, rel_tol);
  std::complex<double> psi = params.c_plus * phi + params.c_minus * std::conj(phi);
  if (theta < 0.0) psi = std::conj(psi);
  return psi;
}

StableParams make_stable_params(double alpha, double c_plus, double c_minus) {
  validate_inputs(alpha, c_plus, c_minus);
  StableParams p;
  p.alpha = alpha;
  p.c_plus = c_plus;
  p.c_minus = c_minus;
  p.skew = (c_plus - c_minus) / (c_plus + c_minus);
  p.unit_scale = std::pow(scale_constant(alpha) * (c_plus + c_minus), 1.0 / alpha);

  // The closed-form mapping is treated as untrusted until it matches the
  // quadrature oracle; a mismatch here would corrupt every experiment.
  for (double theta : {0.5, 1.0, 2.0, -1.0}) {
    const auto closed = cf_exponent_closed(theta, p);
    const auto numeric = cf_exponent_numeric(theta, p);
    const double err = std::abs(closed - numeric);
    if (err > 1e-6 * std::abs(numeric) + 1e-10)
      throw std::runtime_error(
          "stable params: closed-form CF exponent disagrees with quadrature oracle at theta=" +
          std::to_string(theta) + " (|diff|=" + std::to_string(err) + ")");
  }
  return p;
}

double sample_stable_increment(const StableParams& params, double dt, RngStream& rng) {
  if (!(dt > 0.0)) throw std::invalid_argument("sample_stable_increment: dt must be positive");
  const double alpha = params.alpha;
  // Chambers-Mallows-Stuck in the strictly-stable parameterization
  const double tn = params.skew * std::tan(0.5 * kPi * alpha);
  const double theta0 = std::atan(tn) / alpha;
  const double s_factor = std::pow(1.0 + tn * tn, 0.5 / alpha);
  const double v = kPi * (rng.uniform01() - 0.5);
  const double w = rng.exponential();
  const double x = s_factor * std::sin(alpha * (v + theta0)) /
                   std::pow(std::cos(v), 1.0 / alpha) *
                   std::pow(std::cos(v - alpha * (v + theta0)) / w, (1.0 - alpha) / alpha);
  return params.unit_scale * std::pow(dt, 1.0 / alpha) * x;
}

PathRecord sample_stable_path(const StableParams& params, std::span<const double> grid,
                              RngStream& rng) {
  if (grid.empty() || grid.front() != 0.0)
    throw std::invalid_argument("sample_stable_path: grid must start at 0");
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1]))
      throw std::invalid_argument("sample_stable_path: grid must be strictly increasing");
  PathRecord path;
  path.times.assign(grid.begin(), grid.end());
  path.values.resize(grid.size());
  path.values[0] = 0.0;
  for (std::size_t k = 1; k < grid.size(); ++k)
    path.values[k] =
        path.values[k - 1] + sample_stable_increment(params, grid[k] - grid[k - 1], rng);
  return path;
}

JumpLedger sample_large_jumps(const StableParams& params, double epsilon, double T,
                              RngStream& rng) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("sample_large_jumps: epsilon must be positive");
  if (!(T > 0.0)) throw std::invalid_argument("sample_large_jumps: T must be positive");
  const double total = params.c_plus + params.c_minus;
  const double rate = total * std::pow(epsilon, -params.alpha) / params.alpha;
  const double p_up = params.c_plus / total;
  JumpLedger ledger;
  ledger.threshold = epsilon;
  double t = rng.exponential(rate);
  while (t <= T) {
    // tail density ~ |u|^(-1-alpha) on |u| > eps: inverse CDF of the magnitude
    const double mag = epsilon * std::pow(rng.uniform01(), -1.0 / params.alpha);
    const double sign = (rng.uniform01() < p_up) ? 1.0 : -1.0;
    ledger.times.push_back(t);
    ledger.sizes.push_back(sign * mag);
    t += rng.exponential(rate);
  }
  return ledger;
}

SmallJumpMoments small_jump_moments(const StableParams& params, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("small_jump_moments: epsilon must be positive");
  SmallJumpMoments m;
  const double total = params.c_plus + params.c_minus;
  m.variance_rate = total * std::pow(epsilon, 2.0 - params.alpha) / (2.0 - params.alpha);
  m.compensator_rate = (params.c_plus - params.c_minus) *
                       std::pow(epsilon, 1.0 - params.alpha) / (1.0 - params.alpha);
  return m;
}

}  // namespace stablesde
