// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <vector>

#include "tailband/rng.hpp"
#include "tailband/sample.hpp"

namespace tailband {

// Discretized standard Brownian bridge on the grid t_j = j/m, j = 0..m.
// Endpoints are pinned to exactly zero.
struct BridgePath {
  int m = 0;
  std::vector<double> values;  // m+1 entries

  double time(int j) const { return static_cast<double>(j) / m; }
};

// Exact-distribution construction: m Gaussian increments of variance 1/m,
// then W(t) - t*W(1).
BridgePath brownian_bridge_path(int m, Seed seed);

enum class FunctionalSide { X, Y };

// Grid supremum over t in [eps, 1] of the case-specific bridge functionals:
//
//   Frechet/Weibull X:  xi * t^-(1+xi) * B(t)
//   Frechet/Weibull Y:  xi * t^-1 * int_0^t y^-(1+xi) B(y) dy
//   Gumbel X:           e*B(1/e)*ln(t) + B(t)/t
//   Gumbel Y:           e*B(1/e) + t^-1 * int_0^t B(y)/y dy
//
// Integrals use the composite trapezoid rule on the path grid with the
// first panel's left endpoint taken as 0 (B(0) = 0 and the integrand's
// limit is 0 a.s. for admissible xi); B(1/e) is linearly interpolated.
// Grid weights are precomputed once so each path evaluation is O(m).
class SupFunctional {
 public:
  SupFunctional(PlotCase c, double xi, double eps, int m);

  double eval(FunctionalSide side, const BridgePath& path) const;

  int grid_m() const { return m_; }

 private:
  PlotCase case_;
  double xi_;
  double eps_;
  int m_;
  int j_start_;                     // first grid index with t_j >= eps
  std::vector<double> kernel_;      // t^-(1+xi) (Frechet/Weibull) or 1/t (Gumbel)
  std::vector<double> inv_t_;
  std::vector<double> log_t_;
};

// One-shot convenience wrapper.
double sup_functional(PlotCase c, FunctionalSide side, double xi, double eps,
                      const BridgePath& path);

}  // namespace tailband
