// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace tailband {

enum class PlotCase { Frechet, Gumbel, Weibull };

const char* plot_case_name(PlotCase c);

// Descending order statistics X_(1) >= X_(2) >= ... >= X_(n) of a
// univariate sample; at least three finite entries.
class SortedSample {
 public:
  // Validates finiteness, sorts descending (ties keep input order).
  static SortedSample from_data(std::vector<double> values);
  // Accepts an already-descending vector; rejects out-of-order input.
  static SortedSample from_sorted(std::vector<double> values);
  // Trusts the caller's ordering.  Intended for precomputed order-statistic
  // sequences (estimator algebra on deterministic grids).
  static SortedSample from_sorted_unchecked(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  // 1-based: order_stat(1) is the maximum.
  double order_stat(std::size_t i) const { return values_[i - 1]; }
  const std::vector<double>& values() const { return values_; }

 private:
  explicit SortedSample(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

// Sorts a raw sample into descending order statistics.
SortedSample sort_descending(std::vector<double> sample);

struct MEPoint {
  double x = 0.0;
  double y = 0.0;
};

struct PlotNormalizers {
  double x_k = 0.0;        // X_(k)
  double x_1 = 0.0;        // X_(1)
  double x_k_over_e = 0.0; // X_(ceil(k/e)); meaningful for the Gumbel plot
};

// One of the three case-specific normalizations of the truncated ME plot.
// Points are stored in order-statistic order i = first_index .. k; indices
// records each point's i (ties with the maximum are skipped, so the two
// vectors stay aligned).
struct ScaledMEPlot {
  PlotCase plot_case = PlotCase::Frechet;
  std::vector<MEPoint> points;
  std::vector<int> indices;
  int k = 0;
  double epsilon = 0.0;
  int first_index = 0;
  PlotNormalizers normalizers;
};

// Straight-line segment the scaled plot converges to.
struct ReferenceLine {
  PlotCase plot_case = PlotCase::Frechet;
  double xi = 0.0;
  double x_start = 0.0;
  double x_end = 0.0;
  double slope = 0.0;
  double intercept = 0.0;

  double y_at(double x) const { return intercept + slope * x; }
};

// ceil(a*b) for a positive count and fraction, with one-ulp slack so binary
// representation noise (e.g. 1000*0.2 = 200.0000...3) cannot bump the index.
int ceil_scaled_index(int count, double fraction);

// ceil(k/e) with e = exp(1).
int index_k_over_e(int k);

// Empirical mean excess at threshold u: average of X_i - u over strict
// exceedances X_i > u.
double empirical_me(const SortedSample& s, double u);

// The raw plot {(X_(i), M(X_(i))) : i = 2..n}; order statistics tied with
// the maximum have no exceedance and are skipped.
std::vector<MEPoint> me_plot_raw(const SortedSample& s);

// Scaled plots; see ReferenceLine for the limits they approach.
ScaledMEPlot scaled_plot_frechet(const SortedSample& s, int k, double eps);
ScaledMEPlot scaled_plot_gumbel(const SortedSample& s, int k, double eps);
ScaledMEPlot scaled_plot_weibull(const SortedSample& s, int k, double eps);

// Limit segment for the given case, tail index and truncation fraction.
ReferenceLine reference_line(PlotCase c, double xi, double eps);

// Mean excess of a generalized Pareto law: beta/(1-xi) + (xi/(1-xi))*u.
double gpd_me(double xi, double beta, double u);

}  // namespace tailband
