// Copyright 2026 the stablesde authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace stablesde {

struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& msg, double achieved)
      : std::runtime_error(msg + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes on [-1,1] (QUADPACK dqk15 constants).
inline constexpr double kGk15X[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGk15Wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGk15Wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
inline double abs_of(const T& v) {
  if constexpr (std::is_same_v<T, double>) return std::fabs(v);
  else return std::abs(v);
}

template <typename T, typename F>
void gk15(F&& f, double a, double b, T& integral, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fv[15];
  // index layout: 0..6 -> +/- pairs, 7 -> center
  T resk{};
  T resg{};
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kGk15X[i];
    fv[i] = f(c - dx);
    fv[14 - i] = f(c + dx);
  }
  fv[7] = f(c);
  for (int i = 0; i < 7; ++i) resk += kGk15Wk[i] * (fv[i] + fv[14 - i]);
  resk += kGk15Wk[7] * fv[7];
  for (int i = 0; i < 3; ++i) resg += kGk15Wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  resg += kGk15Wg[3] * fv[7];
  integral = resk * h;
  err = abs_of<T>((resk - resg) * h);
}

}  // namespace detail

template <typename T>
struct QuadResult {
  T value{};
  double error = 0.0;
  int intervals = 0;
};

// Globally adaptive Gauss-Kronrod 7-15 on a finite interval. T is double or
// std::complex<double>. Throws QuadratureError when the error estimate cannot
// be brought under max(abs_tol, rel_tol*|I|) within max_intervals.
template <typename T, typename F>
QuadResult<T> adaptive_gk15(F&& f, double a, double b, double rel_tol,
                            double abs_tol = 0.0, int max_intervals = 4000) {
  struct Piece {
    double a, b, err;
    T val;
    bool operator<(const Piece& o) const { return err < o.err; }
  };
  std::priority_queue<Piece> heap;
  T total{};
  double total_err = 0.0;
  auto push = [&](double lo, double hi) {
    Piece p;
    p.a = lo;
    p.b = hi;
    detail::gk15<T>(f, lo, hi, p.val, p.err);
    total += p.val;
    total_err += p.err;
    heap.push(p);
  };
  push(a, b);
  int n = 1;
  auto tol = [&] { return std::max(abs_tol, rel_tol * detail::abs_of<T>(total)); };
  while (total_err > tol() && n < max_intervals) {
    Piece p = heap.top();
    heap.pop();
    total -= p.val;
    total_err -= p.err;
    const double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b) {  // interval at double resolution
      total += p.val;
      total_err += p.err;
      break;
    }
    push(p.a, mid);
    push(mid, p.b);
    ++n;
  }
  if (total_err > tol())
    throw QuadratureError("adaptive quadrature did not converge", total_err);
  return {total, total_err, n};
}

}  // namespace stablesde
