// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tailband/sample.hpp"

namespace tailband {

enum class EstimatorMethod { Hill, Pickands, Moment };

const char* estimator_name(EstimatorMethod m);
EstimatorMethod estimator_from_name(const std::string& name);

struct XiEstimate {
  EstimatorMethod method = EstimatorMethod::Pickands;
  int k = 0;
  double value = 0.0;
};

struct EstimatorPath {
  EstimatorMethod method = EstimatorMethod::Pickands;
  std::vector<std::pair<int, double>> points;
  std::vector<int> skipped;  // k values whose preconditions failed
};

// Hill: mean log-ratio of the top k order statistics over X_(k+1); positive
// tails only.
XiEstimate hill(const SortedSample& s, int k);

// Pickands: log2 of the spacing ratio (X_(k)-X_(2k))/(X_(2k)-X_(4k)).
XiEstimate pickands(const SortedSample& s, int k);

// Dekkers-Einmahl-de Haan moment estimator from the first two log-spacing
// moments.
XiEstimate moment(const SortedSample& s, int k);

EstimatorPath estimator_path(const SortedSample& s, EstimatorMethod method, int k_min,
                             int k_max, int step);

}  // namespace tailband
