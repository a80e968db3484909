// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "tailband/errors.hpp"
#include "tailband/preprocess.hpp"
#include "tailband/rng.hpp"

using namespace tailband;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

TimeSeries daily_series(Date start, const std::vector<double>& values) {
  TimeSeries ts;
  Date d = start;
  for (double v : values) {
    ts.dates.push_back(d);
    ts.values.push_back(v);
    if (std::isnan(v)) ts.missing.insert(ts.values.size() - 1);
    d = d.next();
  }
  return ts;
}

std::vector<double> ar_series(const std::vector<double>& phi, int n, Seed seed,
                              double noise_sd = 1.0) {
  RandomStream rs(seed);
  const int p = static_cast<int>(phi.size());
  std::vector<double> x(static_cast<std::size_t>(n + 200), 0.0);
  for (int t = p; t < n + 200; ++t) {
    double v = noise_sd * rs.next_normal();
    for (int j = 0; j < p; ++j) v += phi[static_cast<std::size_t>(j)] * x[t - 1 - j];
    x[static_cast<std::size_t>(t)] = v;
  }
  return {x.begin() + 200, x.end()};  // drop burn-in
}

double lag_autocorr(const std::vector<double>& x, int lag) {
  double mean = 0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double num = 0, den = 0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    den += (x[t] - mean) * (x[t] - mean);
    if (t >= static_cast<std::size_t>(lag))
      num += (x[t] - mean) * (x[t - static_cast<std::size_t>(lag)] - mean);
  }
  return num / den;
}

}  // namespace

TEST_CASE("date arithmetic") {
  CHECK(Date::parse("2004-02-28").next() == Date{2004, 2, 29});  // leap year
  CHECK(Date::parse("2003-02-28").next() == Date{2003, 3, 1});
  CHECK(Date::parse("2001-12-31").next() == Date{2002, 1, 1});
  CHECK(Date{2004, 2, 29}.day_group() == Date{2004, 2, 28}.day_group());
  CHECK_THROWS_AS(Date::parse("2003-02-29"), Error);
  CHECK_THROWS_AS(Date::parse("not-a-date"), Error);
  CHECK(Date::parse("2001-07-09").to_string() == "2001-07-09");
}

TEST_CASE("imputation fills gaps with the same-day mean of other years") {
  // two years of Jan 1..3; 2002-01-02 missing
  TimeSeries ts;
  ts.dates = {Date{2001, 1, 1}, Date{2001, 1, 2}, Date{2001, 1, 3},
              Date{2002, 1, 1}, Date{2002, 1, 2}, Date{2002, 1, 3}};
  ts.values = {1.0, 2.0, 3.0, 5.0, kNaN, 7.0};
  ts.missing = {4};
  const auto out = impute_daily_mean(ts);
  CHECK(out.missing.empty());
  CHECK(out.values[4] == doctest::Approx(2.0));  // only 2001-01-02 contributes

  SUBCASE("identity on complete series") {
    const auto again = impute_daily_mean(out);
    CHECK(again.values == out.values);
  }
  SUBCASE("mean of two other years") {
    TimeSeries three = ts;
    three.dates.push_back(Date{2003, 1, 1});
    three.dates.push_back(Date{2003, 1, 2});
    three.dates.push_back(Date{2003, 1, 3});
    three.values.push_back(6.0);
    three.values.push_back(4.0);
    three.values.push_back(9.0);
    const auto o = impute_daily_mean(three);
    CHECK(o.values[4] == doctest::Approx((2.0 + 4.0) / 2.0));
  }
  SUBCASE("unimputable day") {
    TimeSeries bad = ts;
    bad.values[1] = kNaN;  // 2001-01-02 also missing -> no donor for Jan 2
    bad.missing.insert(1);
    try {
      impute_daily_mean(bad);
      FAIL("expected UnimputableDay");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnimputableDay);
    }
  }
}

TEST_CASE("deseasonalization normalizes each day group to unit std") {
  TimeSeries ts;
  ts.dates = {Date{2001, 1, 1}, Date{2001, 1, 2}, Date{2002, 1, 1}, Date{2002, 1, 2}};
  ts.values = {1.0, 10.0, 3.0, 30.0};
  const auto out = deseasonalize_daily(ts);
  // day group Jan-1: {1,3}, std = sqrt(2); Jan-2: {10,30}, std = sqrt(200)
  CHECK(out.values[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(out.values[2] == doctest::Approx(3.0 / std::sqrt(2.0)));
  CHECK(out.values[1] == doctest::Approx(10.0 / std::sqrt(200.0)));

  // post-condition: every day group has sample std exactly 1
  std::map<int, std::vector<double>> groups;
  for (std::size_t i = 0; i < out.size(); ++i)
    groups[out.dates[i].day_group()].push_back(out.values[i]);
  for (const auto& [key, vals] : groups) {
    double mean = 0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double ss = 0;
    for (double v : vals) ss += (v - mean) * (v - mean);
    CHECK(std::sqrt(ss / (static_cast<double>(vals.size()) - 1)) == doctest::Approx(1.0));
  }

  SUBCASE("zero-variance day group") {
    TimeSeries flat = ts;
    flat.values = {2.0, 10.0, 2.0, 30.0};
    try {
      deseasonalize_daily(flat);
      FAIL("expected ZeroDayVariance");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ZeroDayVariance);
    }
  }
  SUBCASE("single-year group") {
    const auto lone = daily_series(Date{2001, 3, 1}, {1.0, 2.0, 3.0});
    try {
      deseasonalize_daily(lone);
      FAIL("expected InsufficientYears");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InsufficientYears);
    }
  }
  SUBCASE("missing values are rejected") {
    TimeSeries gap = ts;
    gap.values[1] = kNaN;
    gap.missing = {1};
    CHECK_THROWS_AS(deseasonalize_daily(gap), Error);
  }
}

TEST_CASE("AR(0) fit reduces to the sample variance") {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0, 2.0, 1.0, 3.0};
  const auto model = fit_ar_aic(x, 0);
  CHECK(model.order == 0);
  double mean = 0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double biased = 0;
  for (double v : x) biased += (v - mean) * (v - mean);
  biased /= static_cast<double>(x.size());
  CHECK(model.noise_variance == doctest::Approx(biased).epsilon(1e-12));
  CHECK(model.intercept == doctest::Approx(mean));

  SUBCASE("residuals of AR(0) are the demeaned series") {
    const auto r = residuals(model, x);
    REQUIRE(r.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      CHECK(r[i] == doctest::Approx(x[i] - mean).epsilon(1e-12));
  }
}

TEST_CASE("white noise selects a small order") {
  // AIC overfits a nested scan with positive probability (P(order <= 2) is
  // about 0.89 for white noise), so the seed family is fixed.
  int small = 0;
  for (int run = 0; run < 100; ++run) {
    RandomStream rs(Seed{3600, static_cast<std::uint64_t>(run)});
    std::vector<double> x(1000);
    for (auto& v : x) v = rs.next_normal();
    if (fit_ar_aic(x, 10).order <= 2) ++small;
  }
  CHECK(small >= 90);
}

TEST_CASE("AR(1) recovery") {
  int picked_one = 0;
  double coef_sum = 0.0;
  for (int run = 0; run < 10; ++run) {
    const auto x = ar_series({0.8}, 10000, Seed{601, static_cast<std::uint64_t>(run)});
    const auto model = fit_ar_aic(x, 8);
    if (model.order == 1) ++picked_one;
    REQUIRE(model.order >= 1);
    coef_sum += model.coefficients[0];
  }
  CHECK(picked_one >= 6);  // p = 1 in most runs
  CHECK(std::abs(coef_sum / 10.0 - 0.8) < 0.05);
}

TEST_CASE("zero-noise autoregression reproduces itself") {
  // x_t = 0.5 x_{t-1} + 0.25 x_{t-2} exactly
  std::vector<double> x{1.0, 2.0};
  for (int t = 2; t < 60; ++t)
    x.push_back(0.5 * x[static_cast<std::size_t>(t) - 1] +
                0.25 * x[static_cast<std::size_t>(t) - 2]);
  ARModel model;
  model.order = 2;
  model.coefficients = {0.5, 0.25};
  model.intercept = 0.0;
  const auto r = residuals(model, x);
  REQUIRE(r.size() == x.size() - 2);
  for (double v : r) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("residual whiteness on synthetic AR(2)") {
  const auto x = ar_series({0.5, 0.3}, 8000, Seed{602, 0});
  const auto model = fit_ar_aic(x, 10);
  const auto r = residuals(model, x);
  const double bound = 3.0 / std::sqrt(static_cast<double>(r.size()));
  for (int lag = 1; lag <= 5; ++lag) CHECK(std::abs(lag_autocorr(r, lag)) < bound);
}

TEST_CASE("fit is scale-equivariant") {
  const auto x = ar_series({0.6, -0.2}, 4000, Seed{603, 0});
  std::vector<double> scaled(x);
  for (auto& v : scaled) v *= 4.0;
  const auto m1 = fit_ar_aic(x, 6);
  const auto m2 = fit_ar_aic(scaled, 6);
  CHECK(m1.order == m2.order);
  for (std::size_t j = 0; j < m1.coefficients.size(); ++j)
    CHECK(m2.coefficients[j] == doctest::Approx(m1.coefficients[j]).epsilon(1e-9));
  CHECK(m2.noise_variance == doctest::Approx(16.0 * m1.noise_variance).epsilon(1e-9));
}

TEST_CASE("degenerate series is rejected") {
  const std::vector<double> flat(50, 3.25);
  try {
    fit_ar_aic(flat, 5);
    FAIL("expected DegenerateSeries");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateSeries);
  }
}
