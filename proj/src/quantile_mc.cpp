// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/quantile_mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "tailband/bridge.hpp"
#include "tailband/errors.hpp"
#include "tailband/sampling.hpp"

namespace tailband {

const char* band_case_name(BandCase c) {
  switch (c) {
    case BandCase::FrechetFiniteVar: return "frechet_finite_var";
    case BandCase::FrechetInfiniteVar: return "frechet_infinite_var";
    case BandCase::Gumbel: return "gumbel";
    case BandCase::Weibull: return "weibull";
  }
  return "?";
}

BandCase band_case_from_name(const std::string& name) {
  if (name == "frechet_finite_var") return BandCase::FrechetFiniteVar;
  if (name == "frechet_infinite_var") return BandCase::FrechetInfiniteVar;
  if (name == "gumbel") return BandCase::Gumbel;
  if (name == "weibull") return BandCase::Weibull;
  fail(Errc::BadParam, "unknown band case '" + name + "'");
}

PlotCase plot_case_of(BandCase c) {
  switch (c) {
    case BandCase::FrechetFiniteVar:
    case BandCase::FrechetInfiniteVar:
      return PlotCase::Frechet;
    case BandCase::Gumbel:
      return PlotCase::Gumbel;
    case BandCase::Weibull:
      return PlotCase::Weibull;
  }
  return PlotCase::Frechet;
}

BandCase frechet_case_for_xi(double xi) {
  if (xi > 0.0 && xi < 0.5) return BandCase::FrechetFiniteVar;
  if (xi > 0.5 && xi < 1.0) return BandCase::FrechetInfiniteVar;
  fail(Errc::IncompatibleCase,
       "Frechet bands need xi in (0,1/2) or (1/2,1), got " + std::to_string(xi));
}

void QuantileRequest::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) fail(Errc::BadParam, "eps must lie in (0,1)");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(Errc::BadParam, "alpha must lie in (0,1)");
  if (replicates < 1000) fail(Errc::BadParam, "need at least 1000 replicates");
  if (grid_m < 16) fail(Errc::BadParam, "grid_m must be at least 16");
  switch (band_case) {
    case BandCase::FrechetFiniteVar:
      if (!(xi > 0.0 && xi < 0.5))
        fail(Errc::IncompatibleCase, "FrechetFiniteVar needs 0 < xi < 1/2");
      break;
    case BandCase::FrechetInfiniteVar:
      if (!(xi > 0.5 && xi < 1.0))
        fail(Errc::IncompatibleCase, "FrechetInfiniteVar needs 1/2 < xi < 1");
      break;
    case BandCase::Weibull:
      if (!(xi < 0.0)) fail(Errc::IncompatibleCase, "Weibull needs xi < 0");
      break;
    case BandCase::Gumbel:
      break;
  }
}

double empirical_quantile(std::vector<double> values, double level) {
  if (values.empty()) fail(Errc::BadParam, "quantile of an empty sample");
  if (!(level > 0.0 && level < 1.0)) fail(Errc::BadParam, "quantile level must lie in (0,1)");
  std::sort(values.begin(), values.end());
  int idx = ceil_scaled_index(static_cast<int>(values.size()), level);
  idx = std::clamp(idx, 1, static_cast<int>(values.size()));
  return values[static_cast<std::size_t>(idx) - 1];
}

std::int64_t build_timestamp() {
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0') return static_cast<std::int64_t>(v);
  }
  return 0;
}

QuantileResult mc_quantile(const QuantileRequest& req, const ExecPolicy& ex) {
  req.validate();
  const PlotCase pc = plot_case_of(req.band_case);
  // Gumbel functionals ignore xi; pass a valid placeholder for Frechet form.
  const double fxi = pc == PlotCase::Gumbel ? 0.0 : req.xi;
  const SupFunctional functional(pc, fxi, req.eps, req.grid_m);

  const bool stable_d = req.band_case == BandCase::FrechetInfiniteVar;
  const Seed bridge_seed = req.seed.derived(kBridgeDomainTag);

  std::vector<double> xs(static_cast<std::size_t>(req.replicates));
  std::vector<double> ys(stable_d ? 0 : static_cast<std::size_t>(req.replicates));
  for_each_index(req.replicates, ex, [&](int r) {
    const BridgePath path = brownian_bridge_path(req.grid_m, bridge_seed.substream(r));
    xs[static_cast<std::size_t>(r)] = functional.eval(FunctionalSide::X, path);
    if (!stable_d)
      ys[static_cast<std::size_t>(r)] = functional.eval(FunctionalSide::Y, path);
  });

  QuantileResult result;
  result.request = req;
  result.generator = kGeneratorId;
  result.built_unix = build_timestamp();
  result.c = empirical_quantile(std::move(xs), 1.0 - req.alpha);
  if (stable_d) {
    result.d =
        stable_quantile(req.xi, req.alpha, req.replicates, req.seed.derived(kStableDomainTag), ex);
  } else {
    result.d = empirical_quantile(std::move(ys), 1.0 - req.alpha);
  }
  return result;
}

double stable_quantile(double xi, double alpha, int replicates, Seed seed,
                       const ExecPolicy& ex) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(Errc::BadParam, "alpha must lie in (0,1)");
  if (replicates < 1000) fail(Errc::BadParam, "need at least 1000 replicates");
  const StableParams params = StableParams::from_xi(xi);
  std::vector<double> draws(static_cast<std::size_t>(replicates));
  for_each_index(replicates, ex, [&](int r) {
    draws[static_cast<std::size_t>(r)] = sample_stable(params, seed.substream(r));
  });
  return empirical_quantile(std::move(draws), 1.0 - alpha);
}

QuantileTable::Key QuantileTable::make_key(BandCase c, double xi, double eps, double alpha) {
  const double xi3 = c == BandCase::Gumbel ? 0.0 : std::round(xi * 1000.0) / 1000.0;
  return Key{c, xi3, eps, alpha};
}

bool QuantileTable::insert(const QuantileResult& result) {
  const Key key =
      make_key(result.request.band_case, result.request.xi, result.request.eps,
               result.request.alpha);
  const bool fresh = entries_.find(key) == entries_.end();
  entries_[key] = result;
  return fresh;
}

QuantileResult QuantileTable::lookup(BandCase c, double xi, double eps, double alpha) const {
  if (entries_.empty()) fail(Errc::NotCovered, "quantile table is empty");
  const Key key = make_key(c, xi, eps, alpha);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;

  // Nearest stored xi on each side with identical (case, eps, alpha).
  const QuantileResult* below = nullptr;
  const QuantileResult* above = nullptr;
  double xlo = 0.0;
  double xhi = 0.0;
  for (const auto& [k, v] : entries_) {
    if (k.band_case != c || k.eps != eps || k.alpha != alpha) continue;
    if (k.xi3 <= key.xi3 && (!below || k.xi3 > xlo)) {
      below = &v;
      xlo = k.xi3;
    }
    if (k.xi3 >= key.xi3 && (!above || k.xi3 < xhi)) {
      above = &v;
      xhi = k.xi3;
    }
  }
  if (!below || !above)
    fail(Errc::NotCovered, std::string("no bracketing entries for xi in the table (case ") +
                               band_case_name(c) + ")");
  const double w = xhi == xlo ? 0.0 : (key.xi3 - xlo) / (xhi - xlo);

  QuantileResult out = *below;
  out.interpolated = true;
  out.request.xi = key.xi3;
  out.d = (1.0 - w) * below->d + w * above->d;
  if (below->c && above->c)
    out.c = (1.0 - w) * *below->c + w * *above->c;
  else
    out.c.reset();
  return out;
}

namespace {

nlohmann::ordered_json result_to_json(const QuantileResult& r) {
  nlohmann::ordered_json j;
  j["case"] = band_case_name(r.request.band_case);
  j["xi"] = r.request.xi;
  j["eps"] = r.request.eps;
  j["alpha"] = r.request.alpha;
  if (r.c) j["c"] = *r.c;
  j["d"] = r.d;
  j["replicates"] = r.request.replicates;
  j["grid_m"] = r.request.grid_m;
  j["seed_root"] = r.request.seed.root;
  j["seed_stream"] = r.request.seed.stream;
  j["generator"] = r.generator;
  j["built_unix"] = r.built_unix;
  j["interpolated"] = r.interpolated;
  return j;
}

QuantileResult result_from_json(const nlohmann::json& j) {
  QuantileResult r;
  r.request.band_case = band_case_from_name(j.at("case").get<std::string>());
  r.request.xi = j.at("xi").get<double>();
  r.request.eps = j.at("eps").get<double>();
  r.request.alpha = j.at("alpha").get<double>();
  if (j.contains("c")) r.c = j.at("c").get<double>();
  r.d = j.at("d").get<double>();
  r.request.replicates = j.at("replicates").get<int>();
  r.request.grid_m = j.at("grid_m").get<int>();
  r.request.seed.root = j.at("seed_root").get<std::uint64_t>();
  r.request.seed.stream = j.at("seed_stream").get<std::uint64_t>();
  r.generator = j.at("generator").get<std::string>();
  r.built_unix = j.at("built_unix").get<std::int64_t>();
  r.interpolated = j.value("interpolated", false);
  return r;
}

}  // namespace

void QuantileTable::save(std::ostream& os) const {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["generator"] = kGeneratorId;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, result] : entries_) j["entries"].push_back(result_to_json(result));
  os << j.dump(2) << '\n';
}

QuantileTable QuantileTable::load(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("quantile table is not valid JSON: ") + e.what());
  }
  if (!j.contains("format_version") || j["format_version"].get<int>() != kFormatVersion)
    fail(Errc::ParseError, "quantile table has an unsupported format_version");
  QuantileTable table;
  for (const auto& entry : j.value("entries", nlohmann::json::array()))
    table.insert(result_from_json(entry));
  return table;
}

QuantileTable table_build(const std::vector<QuantileRequest>& requests, const ExecPolicy& ex) {
  QuantileTable table;
  for (const auto& req : requests) {
    req.validate();
    const QuantileResult result = mc_quantile(req, ex);
    if (!table.insert(result))
      std::cerr << "tailband: warning: duplicate quantile key ("
                << band_case_name(req.band_case) << ", xi=" << req.xi << ", eps=" << req.eps
                << ", alpha=" << req.alpha << "); last entry wins\n";
  }
  return table;
}

QuantileResult table_lookup(const QuantileTable& table, BandCase c, double xi, double eps,
                            double alpha) {
  return table.lookup(c, xi, eps, alpha);
}

}  // namespace tailband
