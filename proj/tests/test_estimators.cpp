// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tailband/errors.hpp"
#include "tailband/estimators.hpp"
#include "tailband/sample.hpp"

using namespace tailband;

namespace {

// X_(i) = c*(i/n)^(-xi): exact Pareto-like quantile sequence, descending
// for xi > 0.
SortedSample pareto_quantiles(int n, double xi, double c = 1.0) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    v[static_cast<std::size_t>(i) - 1] = c * std::pow(static_cast<double>(i) / n, -xi);
  return SortedSample::from_sorted(v);
}

}  // namespace

TEST_CASE("Hill on exact Pareto quantiles") {
  const auto s = pareto_quantiles(100000, 0.5, 2.5);
  CHECK(std::abs(hill(s, 1000).value - 0.5) < 0.02);

  SUBCASE("scale invariance") {
    const auto s2 = pareto_quantiles(100000, 0.5, 10.0);
    CHECK(hill(s2, 1000).value == doctest::Approx(hill(s, 1000).value).epsilon(1e-12));
  }
  SUBCASE("constant positive sample gives zero") {
    const auto flat = SortedSample::from_sorted({3, 3, 3, 3, 3});
    CHECK(hill(flat, 3).value == 0.0);
  }
  SUBCASE("nonpositive order statistic") {
    const auto with_zero = SortedSample::from_sorted({3, 2, 1, 0});
    try {
      hill(with_zero, 3);
      FAIL("expected NonpositiveOrderStat");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NonpositiveOrderStat);
    }
  }
}

TEST_CASE("Pickands telescopes exactly on power sequences") {
  // X_(i) = i^(-xi); the spacing ratio is 2^xi for every admissible k.
  for (double xi : {0.5, -0.5, -1.0}) {
    std::vector<double> v(4096);
    for (int i = 1; i <= 4096; ++i)
      v[static_cast<std::size_t>(i) - 1] = std::pow(static_cast<double>(i), -xi);
    const auto s = SortedSample::from_sorted_unchecked(std::move(v));
    for (int k : {1, 2, 5, 100, 512, 1024}) {
      CHECK(std::abs(pickands(s, k).value - xi) < 1e-12);
    }
  }
}

TEST_CASE("Pickands is exact on GPD quantile sequences") {
  // X_(i) = beta*((i/n)^-xi - 1)/xi: the shift and scale cancel in the
  // spacing ratio, which telescopes to 2^xi for every admissible k.
  const int n = 8192;
  for (double xi : {-0.5, 0.25, 0.75}) {
    std::vector<double> v(n);
    for (int i = 1; i <= n; ++i)
      v[static_cast<std::size_t>(i) - 1] =
          (std::pow(static_cast<double>(i) / n, -xi) - 1.0) / xi;
    const auto s = SortedSample::from_sorted(v);
    for (int k : {2, 10, 100, 1000, 2048})
      CHECK(std::abs(pickands(s, k).value - xi) < 1e-10);
  }
}

TEST_CASE("Pickands known limits") {
  const int n = 100000;
  SUBCASE("exponential quantiles approach zero") {
    std::vector<double> v(n);
    for (int i = 1; i <= n; ++i)
      v[static_cast<std::size_t>(i) - 1] = -std::log(static_cast<double>(i) / n);
    const auto s = SortedSample::from_sorted(v);
    CHECK(std::abs(pickands(s, 2000).value) < 0.01);
  }
  SUBCASE("uniform quantiles give exactly -1") {
    std::vector<double> v(n);
    for (int i = 1; i <= n; ++i)
      v[static_cast<std::size_t>(i) - 1] = 1.0 - static_cast<double>(i) / n;
    const auto s = SortedSample::from_sorted(v);
    for (int k : {10, 100, 1000}) CHECK(pickands(s, k).value == doctest::Approx(-1.0));
  }
  SUBCASE("affine invariance") {
    const auto s = pareto_quantiles(8192, 0.5);
    std::vector<double> mapped(s.values());
    for (auto& x : mapped) x = 2.0 * x + 7.0;
    const auto s2 = SortedSample::from_sorted(mapped);
    CHECK(pickands(s2, 512).value == doctest::Approx(pickands(s, 512).value).epsilon(1e-12));
  }
  SUBCASE("degenerate spacing") {
    const auto flat = SortedSample::from_sorted({4, 3, 3, 3, 3, 3, 3, 3});
    try {
      pickands(flat, 2);
      FAIL("expected DegenerateSpacing");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateSpacing);
    }
  }
}

TEST_CASE("moment estimator") {
  SUBCASE("Pareto quantiles, xi = 0.5") {
    const auto s = pareto_quantiles(100000, 0.5);
    CHECK(std::abs(moment(s, 1000).value - 0.5) < 0.05);
  }
  SUBCASE("exponential quantiles approach zero") {
    const int n = 100000;
    std::vector<double> v(n);
    for (int i = 1; i <= n; ++i)
      v[static_cast<std::size_t>(i) - 1] = 1.0 - std::log(static_cast<double>(i) / n);
    const auto s = SortedSample::from_sorted(v);
    CHECK(std::abs(moment(s, 5000).value) < 0.05);
  }
  SUBCASE("constant sample is degenerate") {
    const auto flat = SortedSample::from_sorted({3, 3, 3, 3});
    try {
      moment(flat, 2);
      FAIL("expected DegenerateSpacing");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateSpacing);
    }
  }
  SUBCASE("scale invariance") {
    const auto s = pareto_quantiles(8192, 0.25);
    std::vector<double> scaled(s.values());
    for (auto& x : scaled) x *= 16.0;
    const auto s2 = SortedSample::from_sorted(scaled);
    CHECK(moment(s2, 512).value == doctest::Approx(moment(s, 512).value).epsilon(1e-12));
  }
}

TEST_CASE("estimator paths") {
  const auto s = pareto_quantiles(8192, 0.5);
  SUBCASE("single point ranges") {
    const auto p = estimator_path(s, EstimatorMethod::Pickands, 100, 100, 1);
    REQUIRE(p.points.size() == 1);
    CHECK(p.points[0].second == pickands(s, 100).value);
    const auto p2 = estimator_path(s, EstimatorMethod::Hill, 100, 150, 500);
    REQUIRE(p2.points.size() == 1);
    CHECK(p2.points[0].first == 100);
  }
  SUBCASE("constant along exact Pareto sequences (Pickands)") {
    const auto p = estimator_path(s, EstimatorMethod::Pickands, 10, 2000, 10);
    for (const auto& [k, v] : p.points) CHECK(std::abs(v - 0.5) < 1e-12);
  }
  SUBCASE("path entries equal single-k calls") {
    const auto p = estimator_path(s, EstimatorMethod::Moment, 50, 400, 37);
    for (const auto& [k, v] : p.points) CHECK(v == moment(s, k).value);
  }
  SUBCASE("out-of-precondition ks are skipped with a note") {
    const auto p = estimator_path(s, EstimatorMethod::Pickands, 2049, 2149, 24);  // 4k > n
    CHECK(p.points.empty());
    CHECK_FALSE(p.skipped.empty());
  }
  SUBCASE("empty range") {
    try {
      estimator_path(s, EstimatorMethod::Hill, 100, 50, 1);
      FAIL("expected EmptyRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::EmptyRange);
    }
  }
}
