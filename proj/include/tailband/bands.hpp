// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tailband/estimators.hpp"
#include "tailband/quantile_mc.hpp"
#include "tailband/sample.hpp"

namespace tailband {

struct BandBox {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
};

// Per-point confidence rectangles around a scaled ME plot.
struct ConfidenceBand {
  BandCase band_case = BandCase::Gumbel;
  double alpha = 0.0;
  ScaledMEPlot plot;
  std::vector<BandBox> boxes;
  std::optional<QuantileResult> quantile_meta;
  std::optional<std::pair<double, double>> alpha_split;
};

// Uniform boxes (+-c/sqrt(k), +-d/sqrt(k)) from the bridge-functional
// quantiles; q must have been computed at level alpha/2 for the matching
// case, xi and truncation.
ConfidenceBand band_frechet_finite_var(const ScaledMEPlot& plot, double xi, double alpha,
                                       const QuantileResult& q, int k);
ConfidenceBand band_gumbel(const ScaledMEPlot& plot, double alpha, const QuantileResult& q,
                           int k);
ConfidenceBand band_weibull(const ScaledMEPlot& plot, double xi, double alpha,
                            const QuantileResult& q, int k);

// Infinite-variance Frechet band: symmetric x offsets +-c/sqrt(k) and the
// asymmetric per-point stable interval
//   ( X_(1)*d_lo/(i*X_(k)), X_(1)*d_hi/(i*X_(k)) )
// where i is the point's order-statistic index, d_hi the stable
// (1-alpha2/2)-quantile and d_lo the (alpha2/2)-quantile.  alpha1 and
// alpha2 must satisfy (1-alpha)=(1-alpha1)(1-alpha2).
ConfidenceBand band_frechet_infinite_var(const ScaledMEPlot& plot, double xi, double alpha,
                                         double alpha1, double alpha2, double c, double d_lo,
                                         double d_hi, int k,
                                         std::optional<QuantileResult> meta = {});

// Equal-split alphas with (1-alpha) = (1-a)^2.
double symmetric_alpha_split(double alpha);

struct LineCoverage {
  double covered_fraction = 0.0;
  bool pass = false;
};

// A box covers the line when the line's value at the box's x-center falls
// inside [y_lo, y_hi] and the line's x-range meets the box's x-extent.
LineCoverage contains_line(const ConfidenceBand& band, const ReferenceLine& line,
                           double threshold = 0.95);

struct DetectConfig {
  int k = 0;
  double eps = 0.2;
  double alpha = 0.05;
  EstimatorMethod method = EstimatorMethod::Pickands;
  double gumbel_threshold = 0.05;   // also test Gumbel when |xi_hat| <= this
  double coverage_threshold = 0.95;
  const QuantileTable* table = nullptr;  // optional cache; MC fallback below
  int mc_replicates = 100000;
  int grid_m = 4096;
  Seed seed;
  ExecPolicy exec;
};

struct CaseResult {
  BandCase band_case = BandCase::Gumbel;
  double xi_used = 0.0;
  double alpha = 0.0;
  double covered_fraction = 0.0;
  bool pass = false;
  bool errored = false;
  std::string error;
  std::optional<QuantileResult> quantile;
};

struct Verdict {
  double xi_hat = 0.0;
  EstimatorMethod method = EstimatorMethod::Pickands;
  std::vector<CaseResult> tested;
  std::optional<PlotCase> selected;  // empty = inconclusive
  std::vector<EstimatorPath> diagnostics;
};

// Estimates xi, builds and tests the implied case band (plus Gumbel when
// the estimate is near zero), and selects the passing case closest to the
// estimate.  Band construction failures are recorded per case and never
// abort the other cases.
Verdict detect(const SortedSample& s, const DetectConfig& config);

struct CaseBand {
  ConfidenceBand band;
  ReferenceLine line;
};

// Scaled plot + band + reference line for one case at an explicit alpha,
// resolving quantiles through the config's table or Monte-Carlo fallback.
CaseBand build_case_band(const SortedSample& s, const DetectConfig& config, BandCase c,
                         double xi, double alpha);

}  // namespace tailband
