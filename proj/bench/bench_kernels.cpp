// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
//
// Wall-clock comparison of the serial reference loops against the OpenMP
// kernels.  Also asserts the two paths return identical numbers, which is
// the contract that makes the parallel path safe to ship.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "tailband/coverage.hpp"
#include "tailband/quantile_mc.hpp"

using namespace tailband;
using Clock = std::chrono::steady_clock;

namespace {

template <typename Fn>
double timed(Fn&& fn) {
  const auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s %9.3f s %9.3f s %8.2fx   %s\n", name, serial, parallel,
              serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int scale = argc > 1 ? std::atoi(argv[1]) : 1;

  std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    QuantileRequest req;
    req.band_case = BandCase::Gumbel;
    req.eps = 0.2;
    req.alpha = 0.025;
    req.replicates = 20000 * scale;
    req.grid_m = 4096;
    req.seed = {1, 0};
    QuantileResult rs, rp;
    const double ts = timed([&] { rs = mc_quantile(req, {false, 0}); });
    const double tp = timed([&] { rp = mc_quantile(req, {true, 0}); });
    row("bridge sup quantiles", ts, tp, rs.c == rp.c && rs.d == rp.d);
  }

  {
    double qs = 0, qp = 0;
    const int n = 400000 * scale;
    const double ts = timed([&] { qs = stable_quantile(0.75, 0.025, n, {2, 0}, {false, 0}); });
    const double tp = timed([&] { qp = stable_quantile(0.75, 0.025, n, {2, 0}, {true, 0}); });
    row("stable draws + quantile", ts, tp, qs == qp);
  }

  {
    ExperimentConfig cfg;
    cfg.family = Family::GPD;
    cfg.params = {-0.5, 1.0};
    cfg.n = 10000;
    cfg.replications = 100 * scale;
    cfg.ks = {1000};
    cfg.epss = {0.2};
    cfg.alphas = {0.05};
    cfg.band_case = BandCase::Weibull;
    cfg.true_xi = -0.5;
    cfg.seed = {3, 0};
    cfg.mc_replicates = 5000;
    cfg.grid_m = 1024;
    CoverageReport a, b;
    cfg.exec = {false, 0};
    const double ts = timed([&] { a = run_coverage(cfg); });
    cfg.exec = {true, 0};
    const double tp = timed([&] { b = run_coverage(cfg); });
    bool same = a.rows.size() == b.rows.size();
    for (std::size_t i = 0; same && i < a.rows.size(); ++i)
      same = a.rows[i].covered_fraction == b.rows[i].covered_fraction;
    row("coverage replications", ts, tp, same);
  }

  return 0;
}
