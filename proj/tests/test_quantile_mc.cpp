// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "tailband/bridge.hpp"
#include "tailband/errors.hpp"
#include "tailband/quantile_mc.hpp"

using namespace tailband;

namespace {

QuantileRequest gumbel_request(int replicates = 4000, int grid_m = 512) {
  QuantileRequest req;
  req.band_case = BandCase::Gumbel;
  req.eps = 0.2;
  req.alpha = 0.025;
  req.replicates = replicates;
  req.grid_m = grid_m;
  req.seed = {101, 0};
  return req;
}

}  // namespace

TEST_CASE("empirical quantile convention: ceil(level*R)-th smallest") {
  std::vector<double> v{5, 1, 4, 2, 3};
  CHECK(empirical_quantile(v, 0.5) == 3);    // ceil(2.5) = 3rd smallest
  CHECK(empirical_quantile(v, 0.6) == 3);    // ceil(3.0) = 3rd
  CHECK(empirical_quantile(v, 0.61) == 4);   // ceil(3.05) = 4th
  CHECK(empirical_quantile(v, 0.999) == 5);  // max
  CHECK(empirical_quantile(v, 0.05) == 1);   // min

  const int r = 200;
  std::vector<double> big(r);
  std::mt19937 gen(1);
  std::uniform_real_distribution<double> unif(0, 1);
  for (auto& x : big) x = unif(gen);
  auto sorted = big;
  std::sort(sorted.begin(), sorted.end());
  // alpha -> 0: the (1-alpha) quantile reaches the max; alpha -> 1: the min
  CHECK(empirical_quantile(big, 1.0 - 0.5 / r) == sorted.back());
  CHECK(empirical_quantile(big, 0.5 / r) == sorted.front());
}

TEST_CASE("mc_quantile determinism and serial/parallel agreement") {
  const auto req = gumbel_request();
  const QuantileResult a = mc_quantile(req, {true, 0});
  const QuantileResult b = mc_quantile(req, {true, 0});
  CHECK(a.c == b.c);
  CHECK(a.d == b.d);

  const QuantileResult serial = mc_quantile(req, {false, 0});
  CHECK(*a.c == *serial.c);  // bitwise: parallel must match the reference loop
  CHECK(a.d == serial.d);

  const QuantileResult one_thread = mc_quantile(req, {true, 1});
  CHECK(*a.c == *one_thread.c);
  CHECK(a.d == one_thread.d);

  CHECK(a.generator == std::string(kGeneratorId));
  CHECK(a.d > 0.0);
  CHECK(*a.c > 0.0);
}

TEST_CASE("quantiles are monotone in alpha and eps") {
  auto req = gumbel_request();
  const auto q25 = mc_quantile(req);
  req.alpha = 0.05;
  const auto q50 = mc_quantile(req);
  CHECK(*q25.c >= *q50.c);
  CHECK(q25.d >= q50.d);

  // pathwise monotone in eps on the same seed set
  auto req_wide = gumbel_request();
  auto req_narrow = gumbel_request();
  req_narrow.eps = 0.4;
  const auto qw = mc_quantile(req_wide);
  const auto qn = mc_quantile(req_narrow);
  CHECK(*qn.c <= *qw.c);
  CHECK(qn.d <= qw.d);
}

TEST_CASE("mc self-consistency across seeds (Gumbel)") {
  auto req = gumbel_request(20000, 512);
  const auto a = mc_quantile(req);
  req.seed = {202, 7};
  const auto b = mc_quantile(req);
  CHECK(std::abs(*a.c - *b.c) / *a.c < 0.02);
  CHECK(std::abs(a.d - b.d) / a.d < 0.02);
}

TEST_CASE("doubling replicates moves the quantile less than 3 bootstrap SEs") {
  auto req = gumbel_request(4000, 512);
  req.alpha = 0.05;  // the 95% quantile
  const auto small = mc_quantile(req);
  auto req2 = req;
  req2.replicates = 8000;
  const auto big = mc_quantile(req2);

  // bootstrap SE of the smaller run's d
  const Seed bridge_seed = req.seed.derived(kBridgeDomainTag);
  const SupFunctional f(PlotCase::Gumbel, 0.0, req.eps, req.grid_m);
  std::vector<double> ys(static_cast<std::size_t>(req.replicates));
  for (int r = 0; r < req.replicates; ++r)
    ys[static_cast<std::size_t>(r)] =
        f.eval(FunctionalSide::Y, brownian_bridge_path(req.grid_m, bridge_seed.substream(r)));
  std::mt19937 gen(9);
  std::uniform_int_distribution<std::size_t> pick(0, ys.size() - 1);
  std::vector<double> boot(200);
  std::vector<double> resample(ys.size());
  for (auto& bq : boot) {
    for (auto& x : resample) x = ys[pick(gen)];
    bq = empirical_quantile(resample, 0.95);
  }
  double mean = 0;
  for (double x : boot) mean += x;
  mean /= static_cast<double>(boot.size());
  double var = 0;
  for (double x : boot) var += (x - mean) * (x - mean);
  const double se = std::sqrt(var / (static_cast<double>(boot.size()) - 1));
  CHECK(std::abs(big.d - small.d) < 3 * se);
}

TEST_CASE("infinite-variance case pulls d from the stable law") {
  QuantileRequest req;
  req.band_case = BandCase::FrechetInfiniteVar;
  req.xi = 0.75;
  req.eps = 0.2;
  req.alpha = 0.025;
  req.replicates = 5000;
  req.grid_m = 256;
  req.seed = {55, 0};
  const auto q = mc_quantile(req);
  CHECK(q.c);
  CHECK(*q.c > 0.0);
  CHECK(q.d ==
        stable_quantile(0.75, 0.025, req.replicates, req.seed.derived(kStableDomainTag)));
  // stable quantiles are monotone in alpha
  const double d05 = stable_quantile(0.75, 0.05, 5000, Seed{56, 0});
  const double d025 = stable_quantile(0.75, 0.025, 5000, Seed{56, 0});
  CHECK(d025 >= d05);
  // median self-consistency across seeds
  const double m1 = stable_quantile(0.75, 0.5, 50000, Seed{57, 0});
  const double m2 = stable_quantile(0.75, 0.5, 50000, Seed{58, 0});
  CHECK(std::abs(m1 - m2) / std::abs(m1) < 0.02);
}

TEST_CASE("request validation") {
  QuantileRequest req = gumbel_request();
  req.band_case = BandCase::FrechetFiniteVar;
  req.xi = 0.75;  // wrong side of 1/2
  CHECK_THROWS_AS(req.validate(), Error);
  try {
    req.validate();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncompatibleCase);
  }
  try {
    frechet_case_for_xi(0.5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncompatibleCase);
  }
  CHECK(frechet_case_for_xi(0.25) == BandCase::FrechetFiniteVar);
  CHECK(frechet_case_for_xi(0.75) == BandCase::FrechetInfiniteVar);
}

TEST_CASE("table build, lookup, interpolation, persistence") {
  std::vector<QuantileRequest> reqs;
  for (double xi : {-0.6, -0.4}) {
    QuantileRequest r;
    r.band_case = BandCase::Weibull;
    r.xi = xi;
    r.eps = 0.2;
    r.alpha = 0.025;
    r.replicates = 2000;
    r.grid_m = 128;
    r.seed = {7, 0};
    reqs.push_back(r);
  }
  const QuantileTable table = table_build(reqs);
  CHECK(table.size() == 2);

  SUBCASE("exact hit") {
    const auto q = table.lookup(BandCase::Weibull, -0.4, 0.2, 0.025);
    CHECK_FALSE(q.interpolated);
    CHECK(q.request.xi == -0.4);
  }
  SUBCASE("midpoint interpolation is the arithmetic mean") {
    const auto lo = table.lookup(BandCase::Weibull, -0.6, 0.2, 0.025);
    const auto hi = table.lookup(BandCase::Weibull, -0.4, 0.2, 0.025);
    const auto mid = table.lookup(BandCase::Weibull, -0.5, 0.2, 0.025);
    CHECK(mid.interpolated);
    CHECK(mid.d == doctest::Approx(0.5 * (lo.d + hi.d)).epsilon(1e-12));
    CHECK(*mid.c == doctest::Approx(0.5 * (*lo.c + *hi.c)).epsilon(1e-12));
  }
  SUBCASE("no extrapolation") {
    try {
      table.lookup(BandCase::Weibull, -0.9, 0.2, 0.025);
      FAIL("expected NotCovered");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotCovered);
    }
    try {
      table.lookup(BandCase::Gumbel, 0.0, 0.2, 0.025);
      FAIL("expected NotCovered");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotCovered);
    }
  }
  SUBCASE("round-trip persistence is byte-identical") {
    std::ostringstream first;
    table.save(first);
    std::istringstream in(first.str());
    const QuantileTable reloaded = QuantileTable::load(in);
    std::ostringstream second;
    reloaded.save(second);
    CHECK(first.str() == second.str());
  }
  SUBCASE("duplicate keys: last wins") {
    auto dup = reqs;
    auto changed = reqs[0];
    changed.seed = {99, 0};
    dup.push_back(changed);
    const QuantileTable t2 = table_build(dup);
    CHECK(t2.size() == 2);
    CHECK(t2.lookup(BandCase::Weibull, -0.6, 0.2, 0.025).request.seed.root == 99);
  }
  SUBCASE("empty build") {
    const QuantileTable empty = table_build({});
    CHECK(empty.empty());
    std::ostringstream os;
    empty.save(os);
    std::istringstream is(os.str());
    CHECK(QuantileTable::load(is).empty());
  }
}

TEST_CASE("two identical builds serialize byte-identically") {
  std::vector<QuantileRequest> reqs(1, gumbel_request(2000, 128));
  std::ostringstream a, b;
  table_build(reqs).save(a);
  table_build(reqs).save(b);
  CHECK(a.str() == b.str());
}

TEST_CASE("extreme-alpha quantiles hit the sample ends") {
  auto req = gumbel_request(1000, 128);
  // alpha -> 0: c and d equal the largest simulated value
  req.alpha = 0.5 / req.replicates;
  const auto hi = mc_quantile(req);
  req.alpha = 1.0 - 0.5 / req.replicates;
  const auto lo = mc_quantile(req);
  CHECK(*hi.c >= *lo.c);
  CHECK(hi.d >= lo.d);

  const Seed bridge_seed = req.seed.derived(kBridgeDomainTag);
  const SupFunctional f(PlotCase::Gumbel, 0.0, req.eps, req.grid_m);
  double max_x = -1e300, min_x = 1e300;
  for (int r = 0; r < req.replicates; ++r) {
    const auto p = brownian_bridge_path(req.grid_m, bridge_seed.substream(r));
    const double v = f.eval(FunctionalSide::X, p);
    max_x = std::max(max_x, v);
    min_x = std::min(min_x, v);
  }
  CHECK(*hi.c == max_x);
  CHECK(*lo.c == min_x);
}
