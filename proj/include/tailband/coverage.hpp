// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <string>
#include <vector>

#include "tailband/bands.hpp"
#include "tailband/quantile_mc.hpp"
#include "tailband/sampling.hpp"

namespace tailband {

struct ExperimentConfig {
  Family family = Family::Exponential;
  FamilyParams params{1.0, 0.0};
  std::size_t n = 10000;
  int replications = 200;
  std::vector<int> ks{1000};
  std::vector<double> epss{0.2};
  std::vector<double> alphas{0.05};
  BandCase band_case = BandCase::Gumbel;
  double true_xi = 0.0;  // plugged into plots/bands unless estimating
  bool use_estimated_xi = false;
  EstimatorMethod method = EstimatorMethod::Pickands;
  Seed seed;
  int mc_replicates = 100000;
  int grid_m = 4096;
  const QuantileTable* table = nullptr;
  ExecPolicy exec;
};

// The band case and tail index implied by a sampling family (the Frechet
// sub-case is picked from xi).
void default_case_for_family(Family f, FamilyParams p, BandCase& band_case, double& xi);

struct CoverageCell {
  int k = 0;
  double eps = 0.0;
  double alpha = 0.0;
  double coverage_rate = 0.0;
  double mean_covered_fraction = 0.0;
  int pass_count = 0;
  int error_count = 0;
  double wall_seconds = 0.0;  // console diagnostics only, never persisted
};

struct ReplicationRow {
  int k = 0;
  double eps = 0.0;
  double alpha = 0.0;
  int replication = 0;
  double covered_fraction = 0.0;
  bool pass = false;
  bool errored = false;
};

struct CoverageReport {
  ExperimentConfig config;
  std::vector<CoverageCell> cells;
  std::vector<ReplicationRow> rows;
};

// For every (k, eps, alpha) cell: sample -> scaled plot -> band -> line
// containment, aggregated over `replications` independent samples.
// Replicate r draws the same sample in every cell (so alpha-monotonicity
// holds exactly), and errors are counted per cell without stopping the
// grid.
CoverageReport run_coverage(const ExperimentConfig& cfg);

enum class FigurePreset { GPDneg, Beta22, Exp1, Normal, Lognormal };

const char* figure_preset_name(FigurePreset p);
FigurePreset figure_preset_from_name(const std::string& name);

struct FigureTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct FigureBundle {
  FigurePreset preset = FigurePreset::Exp1;
  std::vector<FigureTable> tables;
};

struct FigureOptions {
  Seed seed;
  int mc_replicates = 100000;
  int grid_m = 4096;
  const QuantileTable* table = nullptr;
  ExecPolicy exec;
};

// Emits, per preset: Pickands and Moment estimator paths plus scaled ME
// plots with 90%/95% bands and the reference line over the (k, eps) grid
// {800,1000} x {0.2,0.3}, as plottable tables.
FigureBundle reproduce_figures(FigurePreset preset, const FigureOptions& opts);

}  // namespace tailband
