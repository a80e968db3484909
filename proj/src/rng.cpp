// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/rng.hpp"

#include <cmath>
#include <numbers>

namespace tailband {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

Seed Seed::derived(std::uint64_t tag) const {
  return {mix64(root ^ mix64(tag + kGolden)), stream};
}

RandomStream::RandomStream(Seed seed)
    : base_(mix64(mix64(seed.root + kGolden) ^ mix64(seed.stream + 2 * kGolden))) {}

std::uint64_t RandomStream::next_u64() {
  ++counter_;
  return mix64(base_ + counter_ * kGolden);
}

double RandomStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_uniform_open() { return 1.0 - next_uniform(); }

double RandomStream::next_uniform_mid() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::next_normal() {
  if (have_cached_normal_) {
    have_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = next_uniform_open();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(theta);
  have_cached_normal_ = true;
  return r * std::cos(theta);
}

double RandomStream::next_exponential() { return -std::log(next_uniform_open()); }

}  // namespace tailband
