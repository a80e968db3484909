// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tailband/rng.hpp"

namespace tailband {

enum class Family { Exponential, Normal, Lognormal, Beta, GPD, Pareto };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Two-slot parameter record; meaning per family:
//   Exponential: a = rate lambda
//   Normal:      a = mean,  b = standard deviation
//   Lognormal:   a = mu,    b = sigma (of the underlying normal)
//   Beta:        a, b = shape parameters
//   GPD:         a = xi,    b = beta (scale)
//   Pareto:      a = tail exponent (survival x^-a on x >= 1)
struct FamilyParams {
  double a = 0.0;
  double b = 0.0;
};

// n GPD(xi, beta) draws by inversion:
//   x = beta*((1-u)^(-xi) - 1)/xi   (xi != 0)
//   x = -beta*ln(1-u)               (xi == 0)
std::vector<double> sample_gpd(double xi, double beta, std::size_t n, Seed seed);

// n iid draws from the named family.  Normal uses Box-Muller; Beta is the
// ratio of two Marsaglia-Tsang gamma variates.
std::vector<double> sample_family(Family f, FamilyParams p, std::size_t n, Seed seed);

// Totally right-skewed stable law arising as the infinite-variance limit of
// scaled mean-excess plots, for tail index 1/xi in (1,2).  The derived
// fields pin the standard (index, skewness, scale) parametrization whose
// characteristic function matches the limit law's:
//
//   E exp(itS) = exp{ -sigma^alpha |t|^alpha [1 - i sgn(t) tan(pi*alpha/2)] }
//
// with alpha = 1/xi, skewness +1, and
// sigma^alpha = Gamma(2-1/xi) |cos(pi/(2*xi))| / (1-xi).  The scale constant
// carries an absolute value: for alpha in (1,2) the cosine is negative, and
// only this sign makes the exponent's real part negative (|CF| <= 1).
struct StableParams {
  double xi = 0.0;
  double alpha = 0.0;      // stability index 1/xi
  double skewness = 1.0;
  double scale = 0.0;      // sigma

  static StableParams from_xi(double xi);
};

// One draw via the Chambers-Mallows-Stuck trigonometric transform.
double sample_stable(const StableParams& p, Seed seed);
// In-order draws from an already-open stream (used by the quantile engine).
double sample_stable(const StableParams& p, RandomStream& rs);

}  // namespace tailband
