// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/estimators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tailband/errors.hpp"

namespace tailband {

const char* estimator_name(EstimatorMethod m) {
  switch (m) {
    case EstimatorMethod::Hill: return "hill";
    case EstimatorMethod::Pickands: return "pickands";
    case EstimatorMethod::Moment: return "moment";
  }
  return "?";
}

EstimatorMethod estimator_from_name(const std::string& name) {
  if (name == "hill") return EstimatorMethod::Hill;
  if (name == "pickands") return EstimatorMethod::Pickands;
  if (name == "moment") return EstimatorMethod::Moment;
  fail(Errc::BadParam, "unknown estimator '" + name + "' (valid: hill, pickands, moment)");
}

namespace {

void check_k_range(const SortedSample& s, int k) {
  if (k < 2 || static_cast<std::size_t>(k) >= s.size())
    fail(Errc::BadParam, "k must satisfy 2 <= k < n, got k=" + std::to_string(k));
}

}  // namespace

XiEstimate hill(const SortedSample& s, int k) {
  check_k_range(s, k);
  const double pivot = s.order_stat(static_cast<std::size_t>(k) + 1);
  if (pivot <= 0.0)
    fail(Errc::NonpositiveOrderStat, "Hill needs X_(k+1) > 0");
  const double log_pivot = std::log(pivot);
  double sum = 0.0;
  for (int i = 1; i <= k; ++i) {
    const double xi_val = s.order_stat(static_cast<std::size_t>(i));
    if (xi_val <= 0.0) fail(Errc::NonpositiveOrderStat, "Hill needs positive top order statistics");
    sum += std::log(xi_val) - log_pivot;
  }
  return {EstimatorMethod::Hill, k, sum / k};
}

XiEstimate pickands(const SortedSample& s, int k) {
  if (k < 1 || static_cast<std::size_t>(4 * k) > s.size())
    fail(Errc::BadParam, "Pickands needs 4k <= n, got k=" + std::to_string(k));
  const double num = s.order_stat(static_cast<std::size_t>(k)) -
                     s.order_stat(static_cast<std::size_t>(2 * k));
  const double den = s.order_stat(static_cast<std::size_t>(2 * k)) -
                     s.order_stat(static_cast<std::size_t>(4 * k));
  if (den == 0.0) fail(Errc::DegenerateSpacing, "X_(2k) equals X_(4k)");
  const double ratio = num / den;
  if (ratio <= 0.0) fail(Errc::NegativeRatio, "spacing ratio is not positive");
  return {EstimatorMethod::Pickands, k, std::log(ratio) / std::numbers::ln2};
}

XiEstimate moment(const SortedSample& s, int k) {
  check_k_range(s, k);
  const double pivot = s.order_stat(static_cast<std::size_t>(k) + 1);
  if (pivot <= 0.0)
    fail(Errc::NonpositiveOrderStat, "moment estimator needs X_(k+1) > 0");
  const double log_pivot = std::log(pivot);
  double h1 = 0.0;
  double h2 = 0.0;
  for (int i = 1; i <= k; ++i) {
    const double xi_val = s.order_stat(static_cast<std::size_t>(i));
    if (xi_val <= 0.0)
      fail(Errc::NonpositiveOrderStat, "moment estimator needs positive top order statistics");
    const double d = std::log(xi_val) - log_pivot;
    h1 += d;
    h2 += d * d;
  }
  h1 /= k;
  h2 /= k;
  if (h2 == 0.0) fail(Errc::DegenerateSpacing, "all top order statistics coincide");
  const double denom = 1.0 - h1 * h1 / h2;
  if (denom == 0.0) fail(Errc::DegenerateSpacing, "log spacings carry no curvature");
  return {EstimatorMethod::Moment, k, h1 + 1.0 - 0.5 / denom};
}

EstimatorPath estimator_path(const SortedSample& s, EstimatorMethod method, int k_min,
                             int k_max, int step) {
  if (step < 1) fail(Errc::BadParam, "step must be at least 1");
  if (k_min > k_max || k_min < 1) fail(Errc::EmptyRange, "no k values in range");
  EstimatorPath path;
  path.method = method;
  for (int k = k_min; k <= k_max; k += step) {
    try {
      XiEstimate e;
      switch (method) {
        case EstimatorMethod::Hill: e = hill(s, k); break;
        case EstimatorMethod::Pickands: e = pickands(s, k); break;
        case EstimatorMethod::Moment: e = moment(s, k); break;
      }
      path.points.emplace_back(k, e.value);
    } catch (const Error&) {
      path.skipped.push_back(k);
    }
  }
  return path;
}

}  // namespace tailband
