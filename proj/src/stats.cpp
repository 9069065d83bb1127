// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#include "stablesde/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stablesde/stable.hpp"

namespace stablesde {

Ecdf::Ecdf(std::span<const double> sample) : sorted_(sample.begin(), sample.end()) {
  if (sorted_.empty()) throw std::invalid_argument("ecdf: empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

KSReport ks_two_sample(std::span<const double> a, std::span<const double> b, double level) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    const double v = std::min(sa[i], sb[j]);
    // left limit at v
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    while (i < sa.size() && sa[i] == v) ++i;
    while (j < sb.size() && sb[j] == v) ++j;
    // right-continuous value at v
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  // past this point one ECDF is constant 1
  if (i < sa.size()) d = std::max(d, 1.0 - static_cast<double>(i) / na);
  if (j < sb.size()) d = std::max(d, 1.0 - static_cast<double>(j) / nb);

  KSReport r;
  r.statistic = d;
  r.n_a = sa.size();
  r.n_b = sb.size();
  const double n_eff = na * nb / (na + nb);
  r.p_value = kolmogorov_sf(d * std::sqrt(n_eff));
  r.level = level;
  r.pass = r.p_value > level;
  return r;
}

double kolmogorov_sf(double z) {
  if (z <= 0.0) return 1.0;
  if (z < 1e-3) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100000; ++k) {
    const double term = std::exp(-2.0 * k * k * z * z);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-10) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

SlopeFit loglog_slope(std::span<const double> t, std::span<const double> x,
                      double t_lo, double t_hi) {
  if (t.size() != x.size()) throw std::invalid_argument("loglog_slope: length mismatch");
  std::vector<double> lt, lx;
  std::size_t excluded = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < t_lo || t[k] > t_hi) continue;
    if (!(x[k] > 0.0) || !(t[k] > 0.0)) {
      ++excluded;
      continue;
    }
    lt.push_back(std::log(t[k]));
    lx.push_back(std::log(x[k]));
  }
  if (lt.size() < 3) throw std::invalid_argument("loglog_slope: fewer than 3 usable points");
  const double n = static_cast<double>(lt.size());
  double mt = 0, mx = 0;
  for (std::size_t k = 0; k < lt.size(); ++k) {
    mt += lt[k];
    mx += lx[k];
  }
  mt /= n;
  mx /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < lt.size(); ++k) {
    sxx += (lt[k] - mt) * (lt[k] - mt);
    sxy += (lt[k] - mt) * (lx[k] - mx);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mx - fit.slope * mt;
  double ss = 0;
  for (std::size_t k = 0; k < lt.size(); ++k) {
    const double r = lx[k] - (fit.intercept + fit.slope * lt[k]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  fit.t_lo = t_lo;
  fit.t_hi = t_hi;
  fit.n_used = lt.size();
  fit.n_excluded = excluded;
  return fit;
}

std::vector<std::complex<double>> empirical_cf(std::span<const double> sample,
                                               std::span<const double> thetas) {
  if (sample.empty()) throw std::invalid_argument("empirical_cf: empty sample");
  std::vector<std::complex<double>> out(thetas.size(), {0.0, 0.0});
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    double re = 0, im = 0;
    for (double v : sample) {
      re += std::cos(thetas[j] * v);
      im += std::sin(thetas[j] * v);
    }
    out[j] = {re / static_cast<double>(sample.size()), im / static_cast<double>(sample.size())};
  }
  return out;
}

double compare_cf(std::span<const double> sample, const StableParams& params, double t,
                  std::span<const double> thetas) {
  const auto ecf = empirical_cf(sample, thetas);
  double worst = 0.0;
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const std::complex<double> target = std::exp(t * cf_exponent_numeric(thetas[j], params));
    worst = std::max(worst, std::abs(ecf[j] - target));
  }
  return worst;
}

namespace {

// regularized lower incomplete gamma P(a,x)
double gamma_p(double a, double x) {
  if (x < 0 || a <= 0) throw std::invalid_argument("gamma_p: bad arguments");
  if (x == 0) return 0.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {  // series
    double ap = a, sum = 1.0 / a, del = sum;
    for (int n = 0; n < 500; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  // continued fraction for Q(a,x)
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  const double q = std::exp(-x + a * std::log(x) - lg) * h;
  return 1.0 - q;
}

}  // namespace

double chi2_sf(double x, int dof) {
  if (dof <= 0) throw std::invalid_argument("chi2_sf: dof must be positive");
  if (x <= 0) return 1.0;
  return 1.0 - gamma_p(0.5 * dof, 0.5 * x);
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median: empty sample");
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  std::nth_element(v.begin(), v.begin() + mid - 1, v.begin() + mid);
  return 0.5 * (v[mid - 1] + hi);
}

}  // namespace stablesde
