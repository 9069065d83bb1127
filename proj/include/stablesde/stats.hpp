// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace stablesde {

struct StableParams;

// Right-continuous empirical CDF: value k/n after the k-th order statistic.
class Ecdf {
 public:
  explicit Ecdf(std::span<const double> sample);
  double operator()(double x) const;
  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

struct KSReport {
  double statistic = 0.0;
  std::size_t n_a = 0, n_b = 0;
  double p_value = 0.0;
  double level = 0.0;
  bool pass = false;
};

// Two-sample Kolmogorov-Smirnov with asymptotic p-value (Kolmogorov series at
// z = D * sqrt(n_a*n_b/(n_a+n_b))). Ties are handled by evaluating the ECDF
// gap at every merged point and its left limit.
KSReport ks_two_sample(std::span<const double> a, std::span<const double> b, double level);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  double t_lo = 0.0, t_hi = 0.0;
  std::size_t n_used = 0;
  std::size_t n_excluded = 0;  // points with x <= 0 inside the window
};

// Least squares of log(x) on log(t) over the window [t_lo, t_hi].
SlopeFit loglog_slope(std::span<const double> t, std::span<const double> x,
                      double t_lo, double t_hi);

std::vector<std::complex<double>> empirical_cf(std::span<const double> sample,
                                               std::span<const double> thetas);

// max_theta | empirical CF - exp(t*psi(theta)) |
double compare_cf(std::span<const double> sample, const StableParams& params, double t,
                  std::span<const double> thetas);

// Survival function of the Kolmogorov distribution, 2*sum (-1)^(k-1) exp(-2 k^2 z^2).
double kolmogorov_sf(double z);

// Upper tail of the chi-square distribution with dof degrees of freedom.
double chi2_sf(double x, int dof);

double median(std::vector<double> v);

}  // namespace stablesde
