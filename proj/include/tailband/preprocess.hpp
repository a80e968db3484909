// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <set>
#include <string>
#include <vector>

namespace tailband {

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;

  bool is_valid() const;
  static Date parse(const std::string& text);  // YYYY-MM-DD
  std::string to_string() const;
  Date next() const;
  // Calendar-day grouping key; Feb 29 folds into the Feb 28 group so leap
  // days never form a 4x-sparser group of their own.
  int day_group() const;
};

struct TimeSeries {
  std::vector<Date> dates;     // strictly increasing
  std::vector<double> values;  // NaN at missing indices
  std::set<std::size_t> missing;

  void validate() const;
  std::size_t size() const { return values.size(); }
};

// Replaces each missing value by the mean of the same calendar day in the
// other years; fails when a day is missing in every year.
TimeSeries impute_daily_mean(const TimeSeries& ts);

// Divides each value by the sample standard deviation of its calendar-day
// group.  Requires a complete series and at least two observations per day
// group.
TimeSeries deseasonalize_daily(const TimeSeries& ts);

struct ARModel {
  int order = 0;
  std::vector<double> coefficients;
  double intercept = 0.0;
  double noise_variance = 0.0;
  double aic = 0.0;
};

// Yule-Walker fits with biased autocovariances for every order 0..max_order
// (one Levinson-Durbin sweep); returns the AIC minimizer, ties toward the
// smaller order.  AIC = n*ln(sigma^2) + 2p, constants dropped.
ARModel fit_ar_aic(const std::vector<double>& values, int max_order);

// One-step-ahead fitted residuals x_t - (intercept + sum phi_j x_{t-j}) for
// t = order+1 .. length; output length = input length - order.
std::vector<double> residuals(const ARModel& model, const std::vector<double>& values);

}  // namespace tailband
