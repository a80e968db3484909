// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tailband/coverage.hpp"
#include "tailband/errors.hpp"

using namespace tailband;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.family = Family::Exponential;
  cfg.params = {1.0, 0.0};
  cfg.n = 2000;
  cfg.replications = 40;
  cfg.ks = {200};
  cfg.epss = {0.2};
  cfg.alphas = {0.05, 0.10};
  cfg.band_case = BandCase::Gumbel;
  cfg.true_xi = 0.0;
  cfg.seed = {700, 0};
  cfg.mc_replicates = 2000;
  cfg.grid_m = 256;
  return cfg;
}

}  // namespace

TEST_CASE("coverage runs are deterministic and thread-count independent") {
  const auto cfg = small_config();
  const auto a = run_coverage(cfg);
  const auto b = run_coverage(cfg);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].covered_fraction == b.rows[i].covered_fraction);
    CHECK(a.rows[i].pass == b.rows[i].pass);
  }

  auto serial_cfg = cfg;
  serial_cfg.exec.parallel = false;
  const auto s = run_coverage(serial_cfg);
  REQUIRE(s.rows.size() == a.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    CHECK(s.rows[i].covered_fraction == a.rows[i].covered_fraction);
}

TEST_CASE("alpha monotonicity holds exactly on shared replicate seeds") {
  const auto report = run_coverage(small_config());
  REQUIRE(report.cells.size() == 2);
  const auto& strict = report.cells[0];  // alpha = 0.05
  const auto& loose = report.cells[1];   // alpha = 0.10
  CHECK(strict.alpha < loose.alpha);
  CHECK(strict.coverage_rate >= loose.coverage_rate);
  // per replicate: the wider band covers at least the fraction of the
  // narrower one
  for (int r = 0; r < small_config().replications; ++r)
    CHECK(report.rows[static_cast<std::size_t>(r)].covered_fraction >=
          report.rows[static_cast<std::size_t>(r) +
                      static_cast<std::size_t>(small_config().replications)]
              .covered_fraction);
}

TEST_CASE("a single replication matches one direct run") {
  auto cfg = small_config();
  cfg.replications = 1;
  cfg.alphas = {0.05};
  const auto report = run_coverage(cfg);
  REQUIRE(report.rows.size() == 1);
  REQUIRE(report.cells.size() == 1);
  CHECK(report.cells[0].coverage_rate == (report.rows[0].pass ? 1.0 : 0.0));
  CHECK(report.cells[0].mean_covered_fraction == report.rows[0].covered_fraction);
}

TEST_CASE("cells keep going when one cell cannot resolve quantiles") {
  auto cfg = small_config();
  cfg.band_case = BandCase::Weibull;
  cfg.true_xi = -0.5;
  cfg.family = Family::GPD;
  cfg.params = {-0.5, 1.0};
  cfg.grid_m = 20;  // floor(eps*m) = 4 at eps 0.2, fine; eps 0.05 cell fails
  cfg.epss = {0.2, 0.05};
  cfg.alphas = {0.05};
  const auto report = run_coverage(cfg);
  REQUIRE(report.cells.size() == 2);
  CHECK(report.cells[0].error_count == 0);
  CHECK(report.cells[1].error_count == cfg.replications);  // GridTooCoarse cell
}

TEST_CASE("figure bundles carry the full panel grid") {
  FigureOptions opts;
  opts.seed = {800, 0};
  opts.mc_replicates = 2000;
  opts.grid_m = 256;
  const auto bundle = reproduce_figures(FigurePreset::Exp1, opts);
  // 2 estimator paths + per (k,eps): plot + 2 bands + refline
  CHECK(bundle.tables.size() == 2 + 4 * 4);
  int plots = 0, bands95 = 0, bands90 = 0, reflines = 0;
  for (const auto& t : bundle.tables) {
    if (t.name.rfind("plot", 0) == 0) {
      ++plots;
      CHECK(t.rows.size() > 100);
    }
    if (t.name.rfind("band95", 0) == 0) ++bands95;
    if (t.name.rfind("band90", 0) == 0) ++bands90;
    if (t.name.rfind("refline", 0) == 0) {
      ++reflines;
      CHECK(t.rows.size() == 2);
    }
    if (t.name.rfind("estimator_", 0) == 0) CHECK_FALSE(t.rows.empty());
  }
  CHECK(plots == 4);
  CHECK(bands95 == 4);
  CHECK(bands90 == 4);
  CHECK(reflines == 4);
}

TEST_CASE("infinite-variance bands cover the Pareto(0.75) line") {
  ExperimentConfig cfg;
  cfg.family = Family::Pareto;
  cfg.params = {4.0 / 3.0, 0.0};
  cfg.n = 10000;
  cfg.replications = 200;
  cfg.ks = {800};
  cfg.epss = {0.2};
  cfg.alphas = {0.05};
  cfg.band_case = BandCase::FrechetInfiniteVar;
  cfg.true_xi = 0.75;
  cfg.seed = {900, 0};
  cfg.mc_replicates = 20000;
  cfg.grid_m = 1024;
  const auto report = run_coverage(cfg);
  CHECK(report.cells.front().coverage_rate >= 0.85);
}

TEST_CASE("family defaults route to the right band case") {
  BandCase c;
  double xi;
  default_case_for_family(Family::Beta, {2.0, 2.0}, c, xi);
  CHECK(c == BandCase::Weibull);
  CHECK(xi == doctest::Approx(-0.5));
  default_case_for_family(Family::GPD, {0.25, 1.0}, c, xi);
  CHECK(c == BandCase::FrechetFiniteVar);
  default_case_for_family(Family::Pareto, {4.0 / 3.0, 0.0}, c, xi);
  CHECK(c == BandCase::FrechetInfiniteVar);
  CHECK(xi == doctest::Approx(0.75));
  default_case_for_family(Family::Lognormal, {0.0, 1.0}, c, xi);
  CHECK(c == BandCase::Gumbel);
}
