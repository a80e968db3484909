// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "tailband/errors.hpp"

namespace tailband {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return lengths[m - 1];
}

}  // namespace

bool Date::is_valid() const {
  return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

Date Date::parse(const std::string& text) {
  Date d;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d-%d-%d%c", &d.year, &d.month, &d.day, &tail) != 3 ||
      !d.is_valid())
    fail(Errc::ParseError, "bad date '" + text + "' (expected YYYY-MM-DD)");
  return d;
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

Date Date::next() const {
  Date d = *this;
  if (++d.day > days_in_month(d.year, d.month)) {
    d.day = 1;
    if (++d.month > 12) {
      d.month = 1;
      ++d.year;
    }
  }
  return d;
}

int Date::day_group() const {
  if (month == 2 && day == 29) return 2 * 100 + 28;
  return month * 100 + day;
}

void TimeSeries::validate() const {
  if (dates.size() != values.size())
    fail(Errc::BadParam, "timestamp and value lengths differ");
  for (std::size_t i = 1; i < dates.size(); ++i)
    if (!(dates[i - 1] < dates[i]))
      fail(Errc::BadParam, "timestamps must be strictly increasing (index " + std::to_string(i) +
                               ")");
  for (std::size_t i : missing)
    if (i >= values.size()) fail(Errc::BadParam, "missing index out of range");
}

TimeSeries impute_daily_mean(const TimeSeries& ts) {
  ts.validate();
  if (ts.missing.empty()) return ts;

  std::map<int, std::pair<double, int>> group_sums;  // day_group -> (sum, count)
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts.missing.count(i)) continue;
    auto& [sum, count] = group_sums[ts.dates[i].day_group()];
    sum += ts.values[i];
    ++count;
  }

  TimeSeries out = ts;
  for (std::size_t i : ts.missing) {
    const auto it = group_sums.find(ts.dates[i].day_group());
    if (it == group_sums.end() || it->second.second == 0)
      fail(Errc::UnimputableDay,
           "no other-year observation for calendar day " + ts.dates[i].to_string());
    out.values[i] = it->second.first / it->second.second;
  }
  out.missing.clear();
  return out;
}

TimeSeries deseasonalize_daily(const TimeSeries& ts) {
  ts.validate();
  if (!ts.missing.empty())
    fail(Errc::BadParam, "deseasonalization needs a complete series; impute first");

  struct Acc {
    double sum = 0.0;
    double sum_sq = 0.0;
    int count = 0;
  };
  std::map<int, Acc> groups;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Acc& a = groups[ts.dates[i].day_group()];
    a.sum += ts.values[i];
    a.sum_sq += ts.values[i] * ts.values[i];
    ++a.count;
  }

  std::map<int, double> group_sd;
  for (const auto& [key, a] : groups) {
    if (a.count < 2)
      fail(Errc::InsufficientYears, "calendar day group " + std::to_string(key) +
                                        " has fewer than 2 observations");
    const double mean = a.sum / a.count;
    const double ss = a.sum_sq - a.count * mean * mean;
    const double var = std::max(ss, 0.0) / (a.count - 1);
    if (var == 0.0)
      fail(Errc::ZeroDayVariance,
           "calendar day group " + std::to_string(key) + " has zero variance");
    group_sd[key] = std::sqrt(var);
  }

  TimeSeries out = ts;
  for (std::size_t i = 0; i < ts.size(); ++i)
    out.values[i] = ts.values[i] / group_sd[ts.dates[i].day_group()];
  return out;
}

ARModel fit_ar_aic(const std::vector<double>& values, int max_order) {
  const auto n = static_cast<int>(values.size());
  if (max_order < 0) fail(Errc::BadParam, "max_order must be nonnegative");
  if (n <= 2 * max_order || n < 3)
    fail(Errc::BadParam, "series length must exceed 2*max_order");

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;

  // Biased autocovariances of the demeaned series.
  std::vector<double> cov(static_cast<std::size_t>(max_order) + 1, 0.0);
  for (int lag = 0; lag <= max_order; ++lag) {
    double s = 0.0;
    for (int t = lag; t < n; ++t) s += (values[t] - mean) * (values[t - lag] - mean);
    cov[static_cast<std::size_t>(lag)] = s / n;
  }
  if (cov[0] <= 0.0) fail(Errc::DegenerateSeries, "series has zero variance");

  // Levinson-Durbin sweep; track the AIC-best order as we go.
  std::vector<double> phi;      // current order coefficients
  std::vector<double> phi_new;
  double sigma2 = cov[0];

  ARModel best;
  best.order = 0;
  best.noise_variance = sigma2;
  best.aic = n * std::log(sigma2) + 0.0;
  best.intercept = mean;

  for (int p = 1; p <= max_order; ++p) {
    double acc = cov[static_cast<std::size_t>(p)];
    for (int j = 1; j < p; ++j)
      acc -= phi[static_cast<std::size_t>(j) - 1] * cov[static_cast<std::size_t>(p - j)];
    const double reflection = acc / sigma2;
    phi_new.assign(static_cast<std::size_t>(p), 0.0);
    for (int j = 1; j < p; ++j)
      phi_new[static_cast<std::size_t>(j) - 1] =
          phi[static_cast<std::size_t>(j) - 1] -
          reflection * phi[static_cast<std::size_t>(p - j) - 1];
    phi_new[static_cast<std::size_t>(p) - 1] = reflection;
    phi = phi_new;
    sigma2 *= 1.0 - reflection * reflection;
    if (!(sigma2 > 0.0)) break;  // numerically perfect fit; higher orders add nothing

    const double aic = n * std::log(sigma2) + 2.0 * p;
    if (aic < best.aic) {
      best.order = p;
      best.coefficients = phi;
      best.noise_variance = sigma2;
      best.aic = aic;
    }
  }

  double coef_sum = 0.0;
  for (double c : best.coefficients) coef_sum += c;
  best.intercept = mean * (1.0 - coef_sum);
  return best;
}

std::vector<double> residuals(const ARModel& model, const std::vector<double>& values) {
  const auto n = static_cast<int>(values.size());
  const int p = model.order;
  if (n <= p) fail(Errc::BadParam, "series shorter than the AR order");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n - p));
  for (int t = p; t < n; ++t) {
    double pred = model.intercept;
    for (int j = 1; j <= p; ++j)
      pred += model.coefficients[static_cast<std::size_t>(j) - 1] * values[t - j];
    out.push_back(values[t] - pred);
  }
  return out;
}

}  // namespace tailband
