// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/bands.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tailband/errors.hpp"

namespace tailband {

namespace {

constexpr double kAlphaTol = 1e-12;

void check_quantile_match(const QuantileResult& q, BandCase c, double xi, double eps,
                          double alpha_half) {
  if (q.request.band_case != c)
    fail(Errc::QuantileMismatch, std::string("quantile entry is for case ") +
                                     band_case_name(q.request.band_case) + ", band needs " +
                                     band_case_name(c));
  if (c != BandCase::Gumbel) {
    const double want = QuantileTable::make_key(c, xi, eps, alpha_half).xi3;
    const double have = QuantileTable::make_key(c, q.request.xi, eps, alpha_half).xi3;
    if (want != have)
      fail(Errc::QuantileMismatch, "quantile entry xi=" + std::to_string(q.request.xi) +
                                       " does not match band xi=" + std::to_string(xi));
  }
  if (std::abs(q.request.eps - eps) > kAlphaTol)
    fail(Errc::QuantileMismatch, "quantile entry eps does not match the plot truncation");
  if (std::abs(q.request.alpha - alpha_half) > kAlphaTol)
    fail(Errc::QuantileMismatch, "quantile entry must be computed at level alpha/2");
}

ConfidenceBand uniform_band(BandCase c, const ScaledMEPlot& plot, double alpha,
                            const QuantileResult& q, int k) {
  if (!q.c) fail(Errc::QuantileMismatch, "quantile entry lacks the X-side value c");
  const double hw_x = *q.c / std::sqrt(static_cast<double>(k));
  const double hw_y = q.d / std::sqrt(static_cast<double>(k));
  ConfidenceBand band{c, alpha, plot, {}, q, {}};
  band.boxes.reserve(plot.points.size());
  for (const MEPoint& p : plot.points)
    band.boxes.push_back({p.x - hw_x, p.x + hw_x, p.y - hw_y, p.y + hw_y});
  return band;
}

}  // namespace

ConfidenceBand band_frechet_finite_var(const ScaledMEPlot& plot, double xi, double alpha,
                                       const QuantileResult& q, int k) {
  if (plot.plot_case != PlotCase::Frechet)
    fail(Errc::CaseMismatch, "plot is not a Frechet-scaled ME plot");
  if (!(xi > 0.0 && xi < 0.5)) fail(Errc::BadXi, "finite-variance Frechet band needs 0 < xi < 1/2");
  check_quantile_match(q, BandCase::FrechetFiniteVar, xi, plot.epsilon, alpha / 2.0);
  return uniform_band(BandCase::FrechetFiniteVar, plot, alpha, q, k);
}

ConfidenceBand band_gumbel(const ScaledMEPlot& plot, double alpha, const QuantileResult& q,
                           int k) {
  if (plot.plot_case != PlotCase::Gumbel)
    fail(Errc::CaseMismatch, "plot is not a Gumbel-scaled ME plot");
  check_quantile_match(q, BandCase::Gumbel, 0.0, plot.epsilon, alpha / 2.0);
  return uniform_band(BandCase::Gumbel, plot, alpha, q, k);
}

ConfidenceBand band_weibull(const ScaledMEPlot& plot, double xi, double alpha,
                            const QuantileResult& q, int k) {
  if (plot.plot_case != PlotCase::Weibull)
    fail(Errc::CaseMismatch, "plot is not a Weibull-scaled ME plot");
  if (!(xi < 0.0)) fail(Errc::BadXi, "Weibull band needs xi < 0");
  check_quantile_match(q, BandCase::Weibull, xi, plot.epsilon, alpha / 2.0);
  return uniform_band(BandCase::Weibull, plot, alpha, q, k);
}

double symmetric_alpha_split(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(Errc::BadParam, "alpha must lie in (0,1)");
  return 1.0 - std::sqrt(1.0 - alpha);
}

ConfidenceBand band_frechet_infinite_var(const ScaledMEPlot& plot, double xi, double alpha,
                                         double alpha1, double alpha2, double c, double d_lo,
                                         double d_hi, int k,
                                         std::optional<QuantileResult> meta) {
  if (plot.plot_case != PlotCase::Frechet)
    fail(Errc::CaseMismatch, "plot is not a Frechet-scaled ME plot");
  if (!(xi > 0.5 && xi < 1.0))
    fail(Errc::BadXi, "infinite-variance Frechet band needs 1/2 < xi < 1");
  if (std::abs((1.0 - alpha1) * (1.0 - alpha2) - (1.0 - alpha)) > 1e-9)
    fail(Errc::BadAlphaSplit, "(1-alpha1)(1-alpha2) must equal 1-alpha");
  if (d_lo > d_hi) fail(Errc::BadParam, "stable interval is inverted (d_lo > d_hi)");
  const double x1 = plot.normalizers.x_1;
  const double xk = plot.normalizers.x_k;
  if (!(xk > 0.0)) fail(Errc::NonpositiveNormalizer, "band needs X_(k) > 0");

  const double hw_x = c / std::sqrt(static_cast<double>(k));
  ConfidenceBand band{BandCase::FrechetInfiniteVar, alpha, plot, {}, std::move(meta),
                      std::make_pair(alpha1, alpha2)};
  band.boxes.reserve(plot.points.size());
  for (std::size_t j = 0; j < plot.points.size(); ++j) {
    const MEPoint& p = plot.points[j];
    const double denom = static_cast<double>(plot.indices[j]) * xk;
    band.boxes.push_back(
        {p.x - hw_x, p.x + hw_x, p.y + x1 * d_lo / denom, p.y + x1 * d_hi / denom});
  }
  return band;
}

LineCoverage contains_line(const ConfidenceBand& band, const ReferenceLine& line,
                           double threshold) {
  if (plot_case_of(band.band_case) != line.plot_case)
    fail(Errc::CaseMismatch, std::string("band case ") + band_case_name(band.band_case) +
                                 " does not match line case " + plot_case_name(line.plot_case));
  if (band.boxes.empty()) return {0.0, false};
  std::size_t covered = 0;
  for (std::size_t j = 0; j < band.boxes.size(); ++j) {
    const BandBox& box = band.boxes[j];
    const double xc = band.plot.points[j].x;
    const double y = line.y_at(xc);
    const bool y_inside = y >= box.y_lo && y <= box.y_hi;
    const bool x_crosses = std::max(box.x_lo, line.x_start) <= std::min(box.x_hi, line.x_end);
    if (y_inside && x_crosses) ++covered;
  }
  const double fraction = static_cast<double>(covered) / static_cast<double>(band.boxes.size());
  return {fraction, fraction >= threshold};
}

namespace {

QuantileResult resolve_quantile(const DetectConfig& cfg, BandCase c, double xi, double alpha) {
  if (cfg.table) {
    try {
      return cfg.table->lookup(c, xi, cfg.eps, alpha);
    } catch (const Error& e) {
      if (e.code() != Errc::NotCovered) throw;
    }
  }
  QuantileRequest req;
  req.band_case = c;
  req.xi = c == BandCase::Gumbel ? 0.0 : xi;
  req.eps = cfg.eps;
  req.alpha = alpha;
  req.replicates = cfg.mc_replicates;
  req.grid_m = cfg.grid_m;
  req.seed = cfg.seed;
  return mc_quantile(req, cfg.exec);
}

}  // namespace

CaseBand build_case_band(const SortedSample& s, const DetectConfig& cfg, BandCase c, double xi,
                         double alpha) {
  CaseBand out;
  switch (c) {
    case BandCase::Gumbel: {
      const ScaledMEPlot plot = scaled_plot_gumbel(s, cfg.k, cfg.eps);
      const QuantileResult q = resolve_quantile(cfg, c, 0.0, alpha / 2.0);
      out.band = band_gumbel(plot, alpha, q, cfg.k);
      out.line = reference_line(PlotCase::Gumbel, 0.0, cfg.eps);
      break;
    }
    case BandCase::Weibull: {
      const ScaledMEPlot plot = scaled_plot_weibull(s, cfg.k, cfg.eps);
      const QuantileResult q = resolve_quantile(cfg, c, xi, alpha / 2.0);
      out.band = band_weibull(plot, xi, alpha, q, cfg.k);
      out.line = reference_line(PlotCase::Weibull, xi, cfg.eps);
      break;
    }
    case BandCase::FrechetFiniteVar: {
      const ScaledMEPlot plot = scaled_plot_frechet(s, cfg.k, cfg.eps);
      const QuantileResult q = resolve_quantile(cfg, c, xi, alpha / 2.0);
      out.band = band_frechet_finite_var(plot, xi, alpha, q, cfg.k);
      out.line = reference_line(PlotCase::Frechet, xi, cfg.eps);
      break;
    }
    case BandCase::FrechetInfiniteVar: {
      const ScaledMEPlot plot = scaled_plot_frechet(s, cfg.k, cfg.eps);
      const double a_part = symmetric_alpha_split(alpha);
      const QuantileResult qc = resolve_quantile(cfg, c, xi, a_part / 2.0);
      if (!qc.c) fail(Errc::QuantileMismatch, "entry lacks the X-side value c");
      const double d_hi = qc.d;  // stable (1 - a_part/2) quantile
      const double d_lo = stable_quantile(xi, 1.0 - a_part / 2.0, cfg.mc_replicates,
                                          cfg.seed.derived(kStableDomainTag), cfg.exec);
      out.band = band_frechet_infinite_var(plot, xi, alpha, a_part, a_part, *qc.c, d_lo, d_hi,
                                           cfg.k, qc);
      out.line = reference_line(PlotCase::Frechet, xi, cfg.eps);
      break;
    }
  }
  return out;
}

namespace {

CaseResult test_case(const SortedSample& s, const DetectConfig& cfg, BandCase c, double xi) {
  CaseResult out;
  out.band_case = c;
  out.xi_used = c == BandCase::Gumbel ? 0.0 : xi;
  out.alpha = cfg.alpha;
  try {
    const CaseBand cb = build_case_band(s, cfg, c, xi, cfg.alpha);
    const LineCoverage cov = contains_line(cb.band, cb.line, cfg.coverage_threshold);
    out.covered_fraction = cov.covered_fraction;
    out.pass = cov.pass;
    out.quantile = cb.band.quantile_meta;
  } catch (const Error& e) {
    out.errored = true;
    out.error = e.what();
  }
  return out;
}

}  // namespace

Verdict detect(const SortedSample& s, const DetectConfig& cfg) {
  if (cfg.k < 2 || static_cast<std::size_t>(cfg.k) >= s.size())
    fail(Errc::BadParam, "k must satisfy 2 <= k < n");

  Verdict verdict;
  verdict.method = cfg.method;
  XiEstimate estimate;
  switch (cfg.method) {
    case EstimatorMethod::Hill: estimate = hill(s, cfg.k); break;
    case EstimatorMethod::Pickands: estimate = pickands(s, cfg.k); break;
    case EstimatorMethod::Moment: estimate = moment(s, cfg.k); break;
  }
  const double xi_hat = estimate.value;
  verdict.xi_hat = xi_hat;

  // Candidate cases: the one implied by xi_hat, plus Gumbel near zero.
  std::vector<std::pair<BandCase, double>> candidates;  // (case, |deviation from xi_hat|)
  if (xi_hat > 0.0) {
    try {
      candidates.emplace_back(frechet_case_for_xi(xi_hat), 0.0);
    } catch (const Error& e) {
      CaseResult bad;
      bad.band_case = BandCase::FrechetFiniteVar;
      bad.xi_used = xi_hat;
      bad.alpha = cfg.alpha;
      bad.errored = true;
      bad.error = e.what();
      verdict.tested.push_back(bad);
    }
  } else if (xi_hat < 0.0) {
    candidates.emplace_back(BandCase::Weibull, 0.0);
  }
  if (std::abs(xi_hat) <= cfg.gumbel_threshold) {
    bool already = false;
    for (const auto& [c, dev] : candidates) already |= (c == BandCase::Gumbel);
    if (!already) candidates.emplace_back(BandCase::Gumbel, std::abs(xi_hat));
  }

  std::optional<PlotCase> selected;
  double best_deviation = 0.0;
  for (const auto& [c, deviation] : candidates) {
    CaseResult result = test_case(s, cfg, c, xi_hat);
    if (result.pass && !result.errored) {
      if (!selected || deviation < best_deviation) {
        selected = plot_case_of(c);
        best_deviation = deviation;
      } else if (deviation == best_deviation && selected != plot_case_of(c)) {
        // two distinct cases equally compatible: inconclusive
        selected.reset();
      }
    }
    verdict.tested.push_back(std::move(result));
  }
  verdict.selected = selected;

  // Estimator panel over a k grid for the diagnostics block.
  const int n = static_cast<int>(s.size());
  const int k_hi = std::min(2 * cfg.k, n - 1);
  const int k_lo = std::max(4, cfg.k / 4);
  const int step = std::max(1, (k_hi - k_lo) / 24);
  if (k_lo <= k_hi) {
    verdict.diagnostics.push_back(
        estimator_path(s, EstimatorMethod::Pickands, k_lo, k_hi, step));
    verdict.diagnostics.push_back(estimator_path(s, EstimatorMethod::Moment, k_lo, k_hi, step));
  }
  return verdict;
}

}  // namespace tailband
