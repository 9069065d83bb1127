// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#include "stablesde/drift.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "stablesde/quadrature.hpp"

namespace stablesde {

namespace {

// Fixed log-step of the SmoothPower g cache. Hermite interpolation error on a
// step of relative width delta is ~ delta^4 x^(2 beta) relative to g, which
// stays below 1e-8 up to x = 1e8 for any beta < 1.
constexpr double kLogStep = 1.0 / 1024.0;

struct Quintic {
  // p(x) = A s^3 + B s^4 + C s^5 with s = x/x0: p(0)=p'(0)=p''(0)=0,
  // p(x0)=0, p'(x0)=s1, p''(x0)=s2.
  double A, B, C, x0;
  static Quintic matching(double x0, double s1, double s2) {
    Quintic q;
    q.x0 = x0;
    q.A = -4.0 * s1 * x0 + 0.5 * s2 * x0 * x0;
    q.B = 7.0 * s1 * x0 - s2 * x0 * x0;
    q.C = -3.0 * s1 * x0 + 0.5 * s2 * x0 * x0;
    return q;
  }
  double value(double x) const {
    const double s = x / x0;
    return ((C * s + B) * s + A) * s * s * s;
  }
  double deriv(double x) const {
    const double s = x / x0;
    return ((5.0 * C * s + 4.0 * B) * s + 3.0 * A) * s * s / x0;
  }
};

}  // namespace

struct DriftSpec::GCache {
  std::shared_mutex mutex;
  std::vector<double> g_nodes;  // cumulative g at x0 * exp(k * kLogStep)
  // under mutex; node values depend only on the fixed grid geometry
};

DriftSpec::DriftSpec(DriftFamily fam, double a, double beta, double x0)
    : family_(fam), a_(a), beta_(beta), x0_(x0) {
  if (!(a > 0.0)) throw std::invalid_argument("drift: a must be positive");
  if (!(beta < 1.0)) throw std::invalid_argument("drift: beta must be < 1");
  if (!(x0 > 0.0)) throw std::invalid_argument("drift: x0 must be positive");
  const FVal fv = eval_f(x0);
  g_x0_prime_ = 1.0 / fv.f;
  g_x0_second_ = -fv.f_prime / (fv.f * fv.f);
  if (fam == DriftFamily::SmoothPower) {
    cache_ = std::make_shared<GCache>();
    cache_->g_nodes.push_back(0.0);
  }
}

DriftSpec DriftSpec::pure_power(double a, double beta, double x0) {
  return DriftSpec(DriftFamily::PurePower, a, beta, x0);
}

DriftSpec DriftSpec::smooth_power(double a, double beta, double x0) {
  return DriftSpec(DriftFamily::SmoothPower, a, beta, x0);
}

DriftSpec::FVal DriftSpec::eval_f(double x) const {
  if (family_ == DriftFamily::SmoothPower) {
    const double q = 1.0 + x * x;
    const double f = a_ * std::pow(q, 0.5 * beta_);
    return {f, beta_ * x * f / q};
  }
  // PurePower
  if (x >= x0_) {
    const double f = a_ * std::pow(x, beta_);
    return {f, beta_ * f / x};
  }
  const double f_hi = a_ * std::pow(x0_, beta_);
  if (x <= 0.5 * x0_) return {0.5 * f_hi, 0.0};
  // cubic Hermite blend on [x0/2, x0]: value f_hi/2 with zero slope on the
  // left, family value and slope on the right
  const double h = 0.5 * x0_;
  const double s = (x - h) / h;
  const double m1 = beta_ * f_hi / x0_;
  const double h00 = (2.0 * s - 3.0) * s * s + 1.0;
  const double h01 = (3.0 - 2.0 * s) * s * s;
  const double h11 = (s - 1.0) * s * s;
  const double d00 = 6.0 * s * (s - 1.0);
  const double d01 = -d00;
  const double d11 = s * (3.0 * s - 2.0);
  const double f = h00 * 0.5 * f_hi + h01 * f_hi + h11 * h * m1;
  const double fp = (d00 * 0.5 * f_hi + d01 * f_hi) / h + d11 * m1;
  return {f, fp};
}

double DriftSpec::g_direct(double x, double rel_tol) const {
  if (x < x0_) throw std::invalid_argument("g_direct: x must be >= x0");
  if (family_ == DriftFamily::PurePower)
    return (std::pow(x, 1.0 - beta_) - std::pow(x0_, 1.0 - beta_)) / (a_ * (1.0 - beta_));
  if (x == x0_) return 0.0;
  auto integrand = [this](double z) { return 1.0 / eval_f(z).f; };
  return adaptive_gk15<double>(integrand, x0_, x, rel_tol, 1e-300, 20000).value;
}

DriftSpec::GVal DriftSpec::eval_g(double x) const {
  if (x <= 0.0) return {0.0, 0.0};
  if (x < x0_) {
    const Quintic q = Quintic::matching(x0_, g_x0_prime_, g_x0_second_);
    return {q.value(x), q.deriv(x)};
  }
  const double g_prime = 1.0 / eval_f(x).f;
  if (family_ == DriftFamily::PurePower) {
    const double g =
        (std::pow(x, 1.0 - beta_) - std::pow(x0_, 1.0 - beta_)) / (a_ * (1.0 - beta_));
    return {g, g_prime};
  }

  // SmoothPower: cumulative quadrature cached on the fixed log grid
  const double u = std::log(x / x0_) / kLogStep;
  const std::size_t seg = static_cast<std::size_t>(u);
  {
    std::shared_lock lock(cache_->mutex);
    if (seg + 1 < cache_->g_nodes.size()) {
      // interpolate within [x_seg, x_seg+1]
    } else {
      lock.unlock();
      std::unique_lock wlock(cache_->mutex);
      while (cache_->g_nodes.size() < seg + 2) {
        const std::size_t k = cache_->g_nodes.size() - 1;
        const double xa = x0_ * std::exp(static_cast<double>(k) * kLogStep);
        const double xb = x0_ * std::exp(static_cast<double>(k + 1) * kLogStep);
        auto integrand = [this](double z) { return 1.0 / eval_f(z).f; };
        const double seg_int = adaptive_gk15<double>(integrand, xa, xb, 1e-12, 1e-300).value;
        cache_->g_nodes.push_back(cache_->g_nodes.back() + seg_int);
      }
    }
  }
  std::shared_lock lock(cache_->mutex);
  const double xa = x0_ * std::exp(static_cast<double>(seg) * kLogStep);
  const double xb = x0_ * std::exp(static_cast<double>(seg + 1) * kLogStep);
  const double ga = cache_->g_nodes[seg];
  const double gb = cache_->g_nodes[seg + 1];
  const double da = 1.0 / eval_f(xa).f;
  const double db = 1.0 / eval_f(xb).f;
  const double h = xb - xa;
  const double s = (x - xa) / h;
  const double h00 = (2.0 * s - 3.0) * s * s + 1.0;
  const double h10 = ((s - 2.0) * s + 1.0) * s;
  const double h01 = (3.0 - 2.0 * s) * s * s;
  const double h11 = (s - 1.0) * s * s;
  const double g = h00 * ga + h10 * h * da + h01 * gb + h11 * h * db;
  return {g, g_prime};
}

HypothesesReport check_theorem_hypotheses(const DriftSpec& spec, double alpha, double c_plus) {
  if (!(alpha > 0.0 && alpha < 2.0) || alpha == 1.0)
    throw std::invalid_argument("check_theorem_hypotheses: alpha must lie in (0,2)\\{1}");
  const double beta = spec.beta();
  HypothesesReport r;
  r.strong_law_valid = beta > 1.0 - alpha;
  r.clt_valid = beta > 1.0 - alpha && beta < 1.0 / (1.0 + alpha);
  r.counterexample_regime = beta > 1.0 / (1.0 + alpha);
  // Both families keep f positive with a finite infimum on every half line
  // (-inf, r], so escape to +infinity holds for alpha > 1 unconditionally and
  // for alpha < 1 whenever upward jumps are present.
  r.assumption2_sufficient = (alpha > 1.0) || (c_plus > 0.0);
  return r;
}

}  // namespace stablesde
