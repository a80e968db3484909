// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/coverage.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <string>

#include "tailband/errors.hpp"

namespace tailband {

namespace {
constexpr std::uint64_t kDomainSample = 0x5A3B7EULL;
}

void default_case_for_family(Family f, FamilyParams p, BandCase& band_case, double& xi) {
  switch (f) {
    case Family::Exponential:
    case Family::Normal:
    case Family::Lognormal:
      band_case = BandCase::Gumbel;
      xi = 0.0;
      return;
    case Family::Beta:
      band_case = BandCase::Weibull;
      xi = -1.0 / p.b;
      return;
    case Family::GPD:
      xi = p.a;
      if (xi < 0.0)
        band_case = BandCase::Weibull;
      else if (xi == 0.0)
        band_case = BandCase::Gumbel;
      else
        band_case = frechet_case_for_xi(xi);
      return;
    case Family::Pareto:
      xi = 1.0 / p.a;
      band_case = frechet_case_for_xi(xi);
      return;
  }
  fail(Errc::BadParam, "unknown family");
}

namespace {

struct CellQuantiles {
  QuantileResult q;       // bridge entry at the needed level
  double d_lo = 0.0;      // infinite-variance extras
  double d_hi = 0.0;
  double alpha_part = 0.0;
};

CellQuantiles resolve_cell(const ExperimentConfig& cfg, double xi, double eps, double alpha) {
  CellQuantiles out;
  const BandCase c = cfg.band_case;
  const double level =
      c == BandCase::FrechetInfiniteVar ? symmetric_alpha_split(alpha) / 2.0 : alpha / 2.0;
  out.alpha_part = c == BandCase::FrechetInfiniteVar ? symmetric_alpha_split(alpha) : 0.0;

  bool from_table = false;
  if (cfg.table) {
    try {
      out.q = cfg.table->lookup(c, xi, eps, level);
      from_table = true;
    } catch (const Error& e) {
      if (e.code() != Errc::NotCovered) throw;
    }
  }
  if (!from_table) {
    QuantileRequest req;
    req.band_case = c;
    req.xi = c == BandCase::Gumbel ? 0.0 : xi;
    req.eps = eps;
    req.alpha = level;
    req.replicates = cfg.mc_replicates;
    req.grid_m = cfg.grid_m;
    req.seed = cfg.seed;
    out.q = mc_quantile(req, cfg.exec);
  }
  if (c == BandCase::FrechetInfiniteVar) {
    out.d_hi = out.q.d;
    out.d_lo = stable_quantile(xi, 1.0 - level, cfg.mc_replicates,
                               cfg.seed.derived(kStableDomainTag), cfg.exec);
  }
  return out;
}

double estimate_xi(const SortedSample& s, EstimatorMethod method, int k) {
  switch (method) {
    case EstimatorMethod::Hill: return hill(s, k).value;
    case EstimatorMethod::Pickands: return pickands(s, k).value;
    case EstimatorMethod::Moment: return moment(s, k).value;
  }
  fail(Errc::BadParam, "unknown estimator");
}

LineCoverage run_one(const ExperimentConfig& cfg, const SortedSample& s, int k, double eps,
                     double alpha, const CellQuantiles& cq, double xi) {
  ConfidenceBand band;
  ReferenceLine line;
  switch (cfg.band_case) {
    case BandCase::Gumbel: {
      const ScaledMEPlot plot = scaled_plot_gumbel(s, k, eps);
      band = band_gumbel(plot, alpha, cq.q, k);
      line = reference_line(PlotCase::Gumbel, 0.0, eps);
      break;
    }
    case BandCase::Weibull: {
      const ScaledMEPlot plot = scaled_plot_weibull(s, k, eps);
      band = band_weibull(plot, xi, alpha, cq.q, k);
      line = reference_line(PlotCase::Weibull, xi, eps);
      break;
    }
    case BandCase::FrechetFiniteVar: {
      const ScaledMEPlot plot = scaled_plot_frechet(s, k, eps);
      band = band_frechet_finite_var(plot, xi, alpha, cq.q, k);
      line = reference_line(PlotCase::Frechet, xi, eps);
      break;
    }
    case BandCase::FrechetInfiniteVar: {
      const ScaledMEPlot plot = scaled_plot_frechet(s, k, eps);
      if (!cq.q.c) fail(Errc::QuantileMismatch, "entry lacks the X-side value c");
      band = band_frechet_infinite_var(plot, xi, alpha, cq.alpha_part, cq.alpha_part, *cq.q.c,
                                       cq.d_lo, cq.d_hi, k, cq.q);
      line = reference_line(PlotCase::Frechet, xi, eps);
      break;
    }
  }
  return contains_line(band, line);
}

}  // namespace

CoverageReport run_coverage(const ExperimentConfig& cfg) {
  if (cfg.replications < 1) fail(Errc::BadParam, "need at least one replication");
  if (cfg.n < 3) fail(Errc::BadParam, "need n >= 3");
  if (cfg.use_estimated_xi && cfg.band_case != BandCase::Gumbel && !cfg.table)
    fail(Errc::BadParam, "estimated-xi coverage needs a quantile table covering the xi range");

  CoverageReport report;
  report.config = cfg;
  const Seed sample_seed = cfg.seed.derived(kDomainSample);

  for (int k : cfg.ks) {
    for (double eps : cfg.epss) {
      for (double alpha : cfg.alphas) {
        const auto t0 = std::chrono::steady_clock::now();
        CoverageCell cell;
        cell.k = k;
        cell.eps = eps;
        cell.alpha = alpha;

        // The estimated-xi mode with a non-Gumbel band resolves quantiles
        // per replicate (through the table); every other mode shares one
        // cell-level resolution.
        const bool per_replicate = cfg.use_estimated_xi && cfg.band_case != BandCase::Gumbel;
        CellQuantiles cq;
        bool cell_ok = true;
        if (!per_replicate) {
          try {
            cq = resolve_cell(cfg, cfg.true_xi, eps, alpha);
          } catch (const Error&) {
            cell_ok = false;
          }
        }

        std::vector<ReplicationRow> rows(static_cast<std::size_t>(cfg.replications));
        if (cell_ok) {
          for_each_index(cfg.replications, cfg.exec, [&](int r) {
            ReplicationRow& row = rows[static_cast<std::size_t>(r)];
            row.k = k;
            row.eps = eps;
            row.alpha = alpha;
            row.replication = r;
            try {
              const SortedSample s = sort_descending(
                  sample_family(cfg.family, cfg.params, cfg.n, sample_seed.substream(r)));
              double xi = cfg.true_xi;
              CellQuantiles local = cq;
              if (cfg.use_estimated_xi) {
                xi = estimate_xi(s, cfg.method, k);
                if (per_replicate) {
                  ExperimentConfig sub = cfg;
                  sub.exec.parallel = false;  // already inside the replicate loop
                  local = resolve_cell(sub, xi, eps, alpha);
                }
              }
              const LineCoverage cov = run_one(cfg, s, k, eps, alpha, local, xi);
              row.covered_fraction = cov.covered_fraction;
              row.pass = cov.pass;
            } catch (const Error&) {
              row.errored = true;
            }
          });
        } else {
          for (auto& row : rows) row.errored = true;
        }

        double frac_sum = 0.0;
        for (const auto& row : rows) {
          cell.pass_count += row.pass ? 1 : 0;
          cell.error_count += row.errored ? 1 : 0;
          frac_sum += row.covered_fraction;
          report.rows.push_back(row);
        }
        cell.coverage_rate = static_cast<double>(cell.pass_count) / cfg.replications;
        cell.mean_covered_fraction = frac_sum / cfg.replications;
        cell.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.cells.push_back(cell);
      }
    }
  }
  return report;
}

const char* figure_preset_name(FigurePreset p) {
  switch (p) {
    case FigurePreset::GPDneg: return "gpdneg";
    case FigurePreset::Beta22: return "beta22";
    case FigurePreset::Exp1: return "exp1";
    case FigurePreset::Normal: return "normal";
    case FigurePreset::Lognormal: return "lognormal";
  }
  return "?";
}

FigurePreset figure_preset_from_name(const std::string& name) {
  if (name == "gpdneg") return FigurePreset::GPDneg;
  if (name == "beta22") return FigurePreset::Beta22;
  if (name == "exp1") return FigurePreset::Exp1;
  if (name == "normal") return FigurePreset::Normal;
  if (name == "lognormal") return FigurePreset::Lognormal;
  fail(Errc::BadParam, "unknown preset '" + name +
                           "' (valid: gpdneg, beta22, exp1, normal, lognormal)");
}

FigureBundle reproduce_figures(FigurePreset preset, const FigureOptions& opts) {
  Family family = Family::Exponential;
  FamilyParams params{1.0, 0.0};
  switch (preset) {
    case FigurePreset::GPDneg: family = Family::GPD; params = {-0.5, 1.0}; break;
    case FigurePreset::Beta22: family = Family::Beta; params = {2.0, 2.0}; break;
    case FigurePreset::Exp1: family = Family::Exponential; params = {1.0, 0.0}; break;
    case FigurePreset::Normal: family = Family::Normal; params = {0.0, 1.0}; break;
    case FigurePreset::Lognormal: family = Family::Lognormal; params = {0.0, 1.0}; break;
  }
  BandCase band_case;
  double xi;
  default_case_for_family(family, params, band_case, xi);

  const std::size_t n = 10000;
  const SortedSample s =
      sort_descending(sample_family(family, params, n, opts.seed.derived(kDomainSample)));

  FigureBundle bundle;
  bundle.preset = preset;

  for (EstimatorMethod method : {EstimatorMethod::Pickands, EstimatorMethod::Moment}) {
    const EstimatorPath path = estimator_path(s, method, 50, 2000, 25);
    FigureTable t;
    t.name = std::string("estimator_") + estimator_name(method);
    t.columns = {"k", "xi"};
    for (const auto& [k, value] : path.points)
      t.rows.push_back({static_cast<double>(k), value});
    bundle.tables.push_back(std::move(t));
  }

  ExperimentConfig qcfg;  // reuse the cell resolver for quantile sourcing
  qcfg.band_case = band_case;
  qcfg.true_xi = xi;
  qcfg.mc_replicates = opts.mc_replicates;
  qcfg.grid_m = opts.grid_m;
  qcfg.table = opts.table;
  qcfg.seed = opts.seed;
  qcfg.exec = opts.exec;

  for (int k : {800, 1000}) {
    for (double eps : {0.2, 0.3}) {
      const std::string suffix =
          "_k" + std::to_string(k) + "_d" + (eps == 0.2 ? std::string("02") : std::string("03"));
      ScaledMEPlot plot;
      switch (plot_case_of(band_case)) {
        case PlotCase::Frechet: plot = scaled_plot_frechet(s, k, eps); break;
        case PlotCase::Gumbel: plot = scaled_plot_gumbel(s, k, eps); break;
        case PlotCase::Weibull: plot = scaled_plot_weibull(s, k, eps); break;
      }

      FigureTable pts;
      pts.name = "plot" + suffix;
      pts.columns = {"x", "y"};
      for (const MEPoint& p : plot.points) pts.rows.push_back({p.x, p.y});
      bundle.tables.push_back(std::move(pts));

      for (double alpha : {0.05, 0.10}) {
        const CellQuantiles cq = resolve_cell(qcfg, xi, eps, alpha);
        ConfidenceBand band;
        switch (band_case) {
          case BandCase::Gumbel: band = band_gumbel(plot, alpha, cq.q, k); break;
          case BandCase::Weibull: band = band_weibull(plot, xi, alpha, cq.q, k); break;
          case BandCase::FrechetFiniteVar:
            band = band_frechet_finite_var(plot, xi, alpha, cq.q, k);
            break;
          case BandCase::FrechetInfiniteVar:
            band = band_frechet_infinite_var(plot, xi, alpha, cq.alpha_part, cq.alpha_part,
                                             *cq.q.c, cq.d_lo, cq.d_hi, k, cq.q);
            break;
        }
        FigureTable bt;
        bt.name = "band" + std::string(alpha == 0.05 ? "95" : "90") + suffix;
        bt.columns = {"x_lo", "x_hi", "y_lo", "y_hi"};
        for (const BandBox& b : band.boxes) bt.rows.push_back({b.x_lo, b.x_hi, b.y_lo, b.y_hi});
        bundle.tables.push_back(std::move(bt));
      }

      const ReferenceLine line = reference_line(plot_case_of(band_case),
                                                plot_case_of(band_case) == PlotCase::Gumbel
                                                    ? 0.0
                                                    : xi,
                                                eps);
      FigureTable lt;
      lt.name = "refline" + suffix;
      lt.columns = {"x", "y"};
      lt.rows.push_back({line.x_start, line.y_at(line.x_start)});
      lt.rows.push_back({line.x_end, line.y_at(line.x_end)});
      bundle.tables.push_back(std::move(lt));
    }
  }
  return bundle;
}

}  // namespace tailband
