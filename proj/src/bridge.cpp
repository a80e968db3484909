// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/bridge.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tailband/errors.hpp"

namespace tailband {

BridgePath brownian_bridge_path(int m, Seed seed) {
  if (m < 16) fail(Errc::BadParam, "bridge grid needs m >= 16, got " + std::to_string(m));
  RandomStream rs(seed);
  BridgePath path;
  path.m = m;
  path.values.resize(static_cast<std::size_t>(m) + 1);
  const double step_sd = 1.0 / std::sqrt(static_cast<double>(m));
  double walk = 0.0;
  for (int j = 1; j <= m; ++j) {
    walk += step_sd * rs.next_normal();
    path.values[static_cast<std::size_t>(j)] = walk;
  }
  const double terminal = walk;
  for (int j = 1; j < m; ++j)
    path.values[static_cast<std::size_t>(j)] -= path.time(j) * terminal;
  path.values.front() = 0.0;
  path.values.back() = 0.0;
  return path;
}

SupFunctional::SupFunctional(PlotCase c, double xi, double eps, int m)
    : case_(c), xi_(xi), eps_(eps), m_(m) {
  if (!(eps > 0.0 && eps < 1.0)) fail(Errc::BadParam, "eps must lie in (0,1)");
  if (std::floor(eps * m) < 4.0)
    fail(Errc::GridTooCoarse, "need floor(eps*m) >= 4; raise the grid size");
  switch (c) {
    case PlotCase::Frechet:
      if (!(xi > 0.0 && xi < 1.0)) fail(Errc::BadXi, "Frechet functionals need 0 < xi < 1");
      break;
    case PlotCase::Weibull:
      if (!(xi < 0.0)) fail(Errc::BadXi, "Weibull functionals need xi < 0");
      break;
    case PlotCase::Gumbel:
      break;  // xi ignored
  }
  j_start_ = ceil_scaled_index(m, eps);

  kernel_.resize(static_cast<std::size_t>(m) + 1);
  inv_t_.resize(static_cast<std::size_t>(m) + 1);
  log_t_.resize(static_cast<std::size_t>(m) + 1);
  kernel_[0] = 0.0;  // integrand limit at t = 0
  inv_t_[0] = 0.0;
  log_t_[0] = 0.0;
  for (int j = 1; j <= m; ++j) {
    const double t = static_cast<double>(j) / m;
    const auto js = static_cast<std::size_t>(j);
    inv_t_[js] = 1.0 / t;
    log_t_[js] = std::log(t);
    kernel_[js] = (c == PlotCase::Gumbel) ? 1.0 / t : std::pow(t, -(1.0 + xi));
  }
}

double SupFunctional::eval(FunctionalSide side, const BridgePath& path) const {
  if (path.m != m_) fail(Errc::BadParam, "path grid does not match the functional's grid");
  const auto& b = path.values;
  const double h = 1.0 / m_;
  double best = -std::numeric_limits<double>::infinity();

  if (case_ == PlotCase::Gumbel) {
    // B(1/e) by linear interpolation between adjacent grid points.
    const double pos = static_cast<double>(m_) / std::numbers::e;
    const int lo = static_cast<int>(std::floor(pos));
    const double frac = pos - lo;
    const double b_at_inv_e = b[static_cast<std::size_t>(lo)] * (1.0 - frac) +
                              b[static_cast<std::size_t>(lo) + 1] * frac;
    const double head = std::numbers::e * b_at_inv_e;
    if (side == FunctionalSide::X) {
      for (int j = j_start_; j <= m_; ++j) {
        const auto js = static_cast<std::size_t>(j);
        const double v = head * log_t_[js] + b[js] * inv_t_[js];
        if (v > best) best = v;
      }
    } else {
      double integral = 0.0;
      double prev = 0.0;  // kernel*B at t_0
      for (int j = 1; j <= m_; ++j) {
        const auto js = static_cast<std::size_t>(j);
        const double cur = kernel_[js] * b[js];
        integral += 0.5 * h * (prev + cur);
        prev = cur;
        if (j >= j_start_) {
          const double v = head + integral * inv_t_[js];
          if (v > best) best = v;
        }
      }
    }
    return best;
  }

  if (side == FunctionalSide::X) {
    for (int j = j_start_; j <= m_; ++j) {
      const auto js = static_cast<std::size_t>(j);
      const double v = xi_ * kernel_[js] * b[js];
      if (v > best) best = v;
    }
  } else {
    double integral = 0.0;
    double prev = 0.0;
    for (int j = 1; j <= m_; ++j) {
      const auto js = static_cast<std::size_t>(j);
      const double cur = kernel_[js] * b[js];
      integral += 0.5 * h * (prev + cur);
      prev = cur;
      if (j >= j_start_) {
        const double v = xi_ * integral * inv_t_[js];
        if (v > best) best = v;
      }
    }
  }
  return best;
}

double sup_functional(PlotCase c, FunctionalSide side, double xi, double eps,
                      const BridgePath& path) {
  return SupFunctional(c, xi, eps, path.m).eval(side, path);
}

}  // namespace tailband
