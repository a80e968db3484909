// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tailband/parallel.hpp"
#include "tailband/rng.hpp"
#include "tailband/sample.hpp"

namespace tailband {

// The four band regimes of the detection procedure.  The Frechet domain
// splits at xi = 1/2: below it both plot coordinates have Brownian-bridge
// limits, above it the vertical fluctuation is stable.
enum class BandCase { FrechetFiniteVar, FrechetInfiniteVar, Gumbel, Weibull };

const char* band_case_name(BandCase c);
BandCase band_case_from_name(const std::string& name);
PlotCase plot_case_of(BandCase c);

// Domain tags separating the independent random sources consumed under one
// user-facing seed.
inline constexpr std::uint64_t kBridgeDomainTag = 0xB21D6EULL;
inline constexpr std::uint64_t kStableDomainTag = 0x57AB1EULL;

// Routes a Frechet request to the finite/infinite-variance regime by xi;
// xi = 1/2 sits on neither side and is rejected.
BandCase frechet_case_for_xi(double xi);

struct QuantileRequest {
  BandCase band_case = BandCase::Gumbel;
  double xi = 0.0;   // ignored (and normalized to 0) for Gumbel
  double eps = 0.2;
  double alpha = 0.025;
  int replicates = 100000;
  int grid_m = 4096;
  Seed seed;

  void validate() const;
};

// Half-width quantiles plus full provenance.  `c` is the (1-alpha) grid
// quantile of the X-side functional; `d` the Y-side (or, in the
// infinite-variance case, the stable law's) quantile.
struct QuantileResult {
  std::optional<double> c;
  double d = 0.0;
  QuantileRequest request;
  std::string generator = kGeneratorId;
  std::int64_t built_unix = 0;
  bool interpolated = false;
};

// Pinned empirical quantile convention: the ceil(level*R)-th smallest of R
// values (with the same one-ulp slack as the plot truncation indices).
double empirical_quantile(std::vector<double> values, double level);

// Simulates `replicates` bridge paths, evaluating both supremum functionals
// on each path, and returns their empirical (1-alpha) quantiles.  For
// FrechetInfiniteVar, c still comes from the X-side bridge functional while
// d is the stable quantile.  Replicate r consumes stream seed.stream + r,
// so the parallel and serial paths agree bitwise.
QuantileResult mc_quantile(const QuantileRequest& req, const ExecPolicy& ex = {});

// Empirical (1-alpha)-quantile of `replicates` stable draws.
double stable_quantile(double xi, double alpha, int replicates, Seed seed,
                       const ExecPolicy& ex = {});

// Persisted cache of quantile results keyed by (case, xi rounded to 3
// decimals, eps, alpha).
class QuantileTable {
 public:
  struct Key {
    BandCase band_case;
    double xi3;  // rounded
    double eps;
    double alpha;
    auto operator<=>(const Key&) const = default;
  };

  static Key make_key(BandCase c, double xi, double eps, double alpha);

  // Inserts (last wins).  Returns false when an entry was overwritten.
  bool insert(const QuantileResult& result);

  // Exact key hit, or linear interpolation in xi between the nearest
  // bracketing entries with identical (case, eps, alpha).  No
  // extrapolation: throws NotCovered.
  QuantileResult lookup(BandCase c, double xi, double eps, double alpha) const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<Key, QuantileResult>& entries() const { return entries_; }

  void save(std::ostream& os) const;
  static QuantileTable load(std::istream& is);

  static constexpr int kFormatVersion = 1;

 private:
  std::map<Key, QuantileResult> entries_;
};

// Evaluates every request into a table; duplicate keys keep the last result
// and emit a warning on stderr.
QuantileTable table_build(const std::vector<QuantileRequest>& requests,
                          const ExecPolicy& ex = {});

QuantileResult table_lookup(const QuantileTable& table, BandCase c, double xi, double eps,
                            double alpha);

// Build timestamp recorded in table metadata; honors SOURCE_DATE_EPOCH and
// falls back to 0 so that repeated builds stay byte-identical.
std::int64_t build_timestamp();

}  // namespace tailband
