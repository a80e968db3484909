// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/sample.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "tailband/errors.hpp"

namespace tailband {

const char* plot_case_name(PlotCase c) {
  switch (c) {
    case PlotCase::Frechet: return "frechet";
    case PlotCase::Gumbel: return "gumbel";
    case PlotCase::Weibull: return "weibull";
  }
  return "?";
}

namespace {

void check_sample(const std::vector<double>& values) {
  if (values.size() < 3)
    fail(Errc::TooFewPoints, "need at least 3 points, got " + std::to_string(values.size()));
  for (double v : values)
    if (!std::isfinite(v)) fail(Errc::NonFiniteValue, "sample contains a NaN or infinity");
}

// Mean excess at every order statistic in one pass.  out[i-1] holds
// M(X_(i)) for 1-based i; NaN where X_(i) ties with the maximum.  `upto`
// limits the scan (0 = all).
std::vector<double> me_at_order_stats(const std::vector<double>& x, std::size_t upto = 0) {
  const std::size_t n = upto == 0 ? x.size() : upto;
  std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
  double prefix = 0.0;         // sum of x[0..i-1]
  double prefix_above = 0.0;   // sum of entries strictly greater than x[i]
  std::size_t run_start = 0;   // first index of the current tie run
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      if (x[i] != x[i - 1]) {
        run_start = i;
        prefix_above = prefix;
      }
      const auto g = static_cast<double>(run_start);
      if (run_start > 0) out[i] = (prefix_above - g * x[i]) / g;
    }
    prefix += x[i];
  }
  return out;
}

void check_k_eps(const SortedSample& s, int k, double eps) {
  if (k < 2 || static_cast<std::size_t>(k) >= s.size())
    fail(Errc::BadParam, "k must satisfy 2 <= k < n, got k=" + std::to_string(k));
  if (!(eps > 0.0 && eps < 1.0))
    fail(Errc::BadParam, "eps must lie in (0,1), got " + std::to_string(eps));
}

}  // namespace

SortedSample SortedSample::from_data(std::vector<double> values) {
  check_sample(values);
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return SortedSample(std::move(values));
}

SortedSample SortedSample::from_sorted(std::vector<double> values) {
  check_sample(values);
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[i - 1])
      fail(Errc::BadParam, "values are not in descending order at index " + std::to_string(i));
  return SortedSample(std::move(values));
}

SortedSample SortedSample::from_sorted_unchecked(std::vector<double> values) {
  check_sample(values);
  return SortedSample(std::move(values));
}

SortedSample sort_descending(std::vector<double> sample) {
  return SortedSample::from_data(std::move(sample));
}

int ceil_scaled_index(int count, double fraction) {
  const double scaled = static_cast<double>(count) * fraction;
  const double slack = scaled * (1.0 - 4.0 * std::numeric_limits<double>::epsilon());
  return static_cast<int>(std::ceil(slack));
}

int index_k_over_e(int k) {
  return static_cast<int>(std::ceil(static_cast<double>(k) / std::numbers::e));
}

double empirical_me(const SortedSample& s, double u) {
  const auto& x = s.values();
  if (u >= x.front()) fail(Errc::NoExceedance, "threshold is at or above the sample maximum");
  // Values are descending: count entries strictly greater than u.
  auto it = std::lower_bound(x.begin(), x.end(), u,
                             [](double value, double thr) { return value > thr; });
  const std::size_t m = static_cast<std::size_t>(it - x.begin());
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) sum += x[i] - u;
  return sum / static_cast<double>(m);
}

std::vector<MEPoint> me_plot_raw(const SortedSample& s) {
  const auto& x = s.values();
  const auto me = me_at_order_stats(x);
  std::vector<MEPoint> points;
  points.reserve(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!std::isnan(me[i])) points.push_back({x[i], me[i]});
  return points;
}

ScaledMEPlot scaled_plot_frechet(const SortedSample& s, int k, double eps) {
  check_k_eps(s, k, eps);
  const auto& x = s.values();
  const double xk = x[static_cast<std::size_t>(k) - 1];
  if (xk <= 0.0) fail(Errc::NonpositiveNormalizer, "X_(k) must be positive for the Frechet plot");
  const int i0 = ceil_scaled_index(k, eps);
  if (i0 < 2) fail(Errc::BadTruncation, "ceil(k*eps) must be at least 2");

  const auto me = me_at_order_stats(x, static_cast<std::size_t>(k) + 1);
  ScaledMEPlot plot{PlotCase::Frechet, {}, {}, k, eps, i0, {xk, x[0], 0.0}};
  plot.points.reserve(static_cast<std::size_t>(k - i0 + 1));
  for (int i = i0; i <= k; ++i) {
    const double mi = me[static_cast<std::size_t>(i) - 1];
    if (std::isnan(mi)) continue;  // tied with the maximum
    plot.points.push_back({x[static_cast<std::size_t>(i) - 1] / xk, mi / xk});
    plot.indices.push_back(i);
  }
  return plot;
}

ScaledMEPlot scaled_plot_gumbel(const SortedSample& s, int k, double eps) {
  check_k_eps(s, k, eps);
  const auto& x = s.values();
  const double xk = x[static_cast<std::size_t>(k) - 1];
  const int ke = index_k_over_e(k);
  const double xke = x[static_cast<std::size_t>(ke) - 1];
  if (!(xke > xk))
    fail(Errc::DegenerateNormalizer, "X_(ceil(k/e)) must exceed X_(k) for the Gumbel plot");
  const int i0 = ceil_scaled_index(k, eps);
  if (i0 < 2) fail(Errc::BadTruncation, "ceil(k*eps) must be at least 2");

  const double scale = xke - xk;
  const auto me = me_at_order_stats(x, static_cast<std::size_t>(k) + 1);
  ScaledMEPlot plot{PlotCase::Gumbel, {}, {}, k, eps, i0, {xk, x[0], xke}};
  plot.points.reserve(static_cast<std::size_t>(k - i0 + 1));
  for (int i = i0; i <= k; ++i) {
    const double mi = me[static_cast<std::size_t>(i) - 1];
    if (std::isnan(mi)) continue;
    plot.points.push_back({(x[static_cast<std::size_t>(i) - 1] - xk) / scale, mi / scale});
    plot.indices.push_back(i);
  }
  return plot;
}

ScaledMEPlot scaled_plot_weibull(const SortedSample& s, int k, double eps) {
  check_k_eps(s, k, eps);
  const auto& x = s.values();
  const double xk = x[static_cast<std::size_t>(k) - 1];
  const double x1 = x[0];
  if (!(x1 > xk)) fail(Errc::DegenerateNormalizer, "X_(1) must exceed X_(k) for the Weibull plot");
  // eps = 2/k reproduces the untruncated index range i = 2..k.
  const int i0 = ceil_scaled_index(k, eps);
  if (i0 < 2) fail(Errc::BadTruncation, "ceil(k*eps) must be at least 2");

  const double scale = x1 - xk;
  const auto me = me_at_order_stats(x, static_cast<std::size_t>(k) + 1);
  ScaledMEPlot plot{PlotCase::Weibull, {}, {}, k, eps, i0, {xk, x1, 0.0}};
  plot.points.reserve(static_cast<std::size_t>(k - i0 + 1));
  for (int i = i0; i <= k; ++i) {
    const double mi = me[static_cast<std::size_t>(i) - 1];
    if (std::isnan(mi)) continue;
    plot.points.push_back({(x[static_cast<std::size_t>(i) - 1] - xk) / scale, mi / scale});
    plot.indices.push_back(i);
  }
  return plot;
}

ReferenceLine reference_line(PlotCase c, double xi, double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    fail(Errc::BadParam, "eps must lie in (0,1), got " + std::to_string(eps));
  switch (c) {
    case PlotCase::Frechet: {
      if (!(xi > 0.0 && xi < 1.0)) fail(Errc::BadXi, "Frechet reference needs 0 < xi < 1");
      return {c, xi, 1.0, 1.0 / eps, xi / (1.0 - xi), 0.0};
    }
    case PlotCase::Gumbel:
      return {c, 0.0, 0.0, -std::log(eps), 0.0, 1.0};
    case PlotCase::Weibull: {
      if (!(xi < 0.0)) fail(Errc::BadXi, "Weibull reference needs xi < 0");
      // y = (-xi/(1-xi)) * (1 - x): positive at the left end, zero at the
      // right end point.
      const double a = -xi / (1.0 - xi);
      return {c, xi, 0.0, 1.0 - std::pow(eps, -xi), -a, a};
    }
  }
  fail(Errc::BadParam, "unknown plot case");
}

double gpd_me(double xi, double beta, double u) {
  if (beta <= 0.0) fail(Errc::BadParam, "beta must be positive");
  if (xi >= 1.0) fail(Errc::InfiniteMean, "GPD mean excess requires xi < 1");
  if (u < 0.0) fail(Errc::OutOfSupport, "threshold must be nonnegative");
  if (xi < 0.0 && u > -beta / xi)
    fail(Errc::OutOfSupport, "threshold lies beyond the right end point");
  return beta / (1.0 - xi) + xi / (1.0 - xi) * u;
}

}  // namespace tailband
