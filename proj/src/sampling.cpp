// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/sampling.hpp"

#include <cmath>
#include <numbers>

#include "tailband/errors.hpp"

namespace tailband {

const char* family_name(Family f) {
  switch (f) {
    case Family::Exponential: return "exponential";
    case Family::Normal: return "normal";
    case Family::Lognormal: return "lognormal";
    case Family::Beta: return "beta";
    case Family::GPD: return "gpd";
    case Family::Pareto: return "pareto";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "exponential" || name == "exp") return Family::Exponential;
  if (name == "normal") return Family::Normal;
  if (name == "lognormal") return Family::Lognormal;
  if (name == "beta") return Family::Beta;
  if (name == "gpd") return Family::GPD;
  if (name == "pareto") return Family::Pareto;
  fail(Errc::BadParam,
       "unknown family '" + name + "' (valid: exponential, normal, lognormal, beta, gpd, pareto)");
}

namespace {

double gpd_inverse(double xi, double beta, double u) {
  const double tail = 1.0 - u;  // in (0,1]
  if (xi == 0.0) return -beta * std::log(tail);
  return beta * (std::pow(tail, -xi) - 1.0) / xi;
}

// Marsaglia-Tsang squeeze method; shapes below 1 are boosted through
// gamma(shape+1) * U^(1/shape).
double gamma_draw(RandomStream& rs, double shape) {
  if (shape < 1.0)
    return gamma_draw(rs, shape + 1.0) * std::pow(rs.next_uniform_open(), 1.0 / shape);
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double z = rs.next_normal();
    double v = 1.0 + c * z;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rs.next_uniform_open();
    if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

std::vector<double> sample_gpd(double xi, double beta, std::size_t n, Seed seed) {
  if (beta <= 0.0) fail(Errc::BadParam, "GPD scale beta must be positive");
  if (n == 0) fail(Errc::BadParam, "need n >= 1 draws");
  RandomStream rs(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = gpd_inverse(xi, beta, rs.next_uniform());
  return out;
}

std::vector<double> sample_family(Family f, FamilyParams p, std::size_t n, Seed seed) {
  if (n == 0) fail(Errc::BadParam, "need n >= 1 draws");
  RandomStream rs(seed);
  std::vector<double> out(n);
  switch (f) {
    case Family::Exponential:
      if (p.a <= 0.0) fail(Errc::BadParam, "exponential rate must be positive");
      for (auto& v : out) v = rs.next_exponential() / p.a;
      break;
    case Family::Normal:
      if (p.b <= 0.0) fail(Errc::BadParam, "normal standard deviation must be positive");
      for (auto& v : out) v = p.a + p.b * rs.next_normal();
      break;
    case Family::Lognormal:
      if (p.b <= 0.0) fail(Errc::BadParam, "lognormal sigma must be positive");
      for (auto& v : out) v = std::exp(p.a + p.b * rs.next_normal());
      break;
    case Family::Beta: {
      if (p.a <= 0.0 || p.b <= 0.0) fail(Errc::BadParam, "beta shapes must be positive");
      for (auto& v : out) {
        const double ga = gamma_draw(rs, p.a);
        const double gb = gamma_draw(rs, p.b);
        v = ga / (ga + gb);
      }
      break;
    }
    case Family::GPD:
      if (p.b <= 0.0) fail(Errc::BadParam, "GPD scale beta must be positive");
      for (auto& v : out) v = gpd_inverse(p.a, p.b, rs.next_uniform());
      break;
    case Family::Pareto:
      if (p.a <= 0.0) fail(Errc::BadParam, "Pareto tail exponent must be positive");
      for (auto& v : out) v = std::pow(rs.next_uniform_open(), -1.0 / p.a);
      break;
  }
  return out;
}

StableParams StableParams::from_xi(double xi) {
  if (!(xi > 0.5 && xi < 1.0))
    fail(Errc::BadXi, "stable limit needs 1/2 < xi < 1, got " + std::to_string(xi));
  StableParams p;
  p.xi = xi;
  p.alpha = 1.0 / xi;
  p.skewness = 1.0;
  const double sigma_alpha =
      std::tgamma(2.0 - 1.0 / xi) * std::abs(std::cos(std::numbers::pi / (2.0 * xi))) / (1.0 - xi);
  p.scale = std::pow(sigma_alpha, xi);  // sigma = (sigma^alpha)^(1/alpha)
  return p;
}

double sample_stable(const StableParams& p, RandomStream& rs) {
  const double a = p.alpha;
  const double theta0 = std::atan(p.skewness * std::tan(std::numbers::pi * a / 2.0)) / a;
  const double v = std::numbers::pi * (rs.next_uniform_mid() - 0.5);
  const double w = rs.next_exponential();
  const double z = std::sin(a * (v + theta0)) /
                       std::pow(std::cos(a * theta0) * std::cos(v), 1.0 / a) *
                   std::pow(std::cos(a * theta0 + (a - 1.0) * v) / w, (1.0 - a) / a);
  return p.scale * z;
}

double sample_stable(const StableParams& p, Seed seed) {
  RandomStream rs(seed);
  return sample_stable(p, rs);
}

}  // namespace tailband
