// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tailband {

enum class Errc {
  // data / io
  IoError,
  ParseError,
  // sample and plot preconditions
  TooFewPoints,
  NonFiniteValue,
  NoExceedance,
  BadTruncation,
  NonpositiveNormalizer,
  DegenerateNormalizer,
  BadXi,
  OutOfSupport,
  InfiniteMean,
  // random generation
  BadParam,
  GridTooCoarse,
  // quantile machinery
  IncompatibleCase,
  NotCovered,
  // bands
  QuantileMismatch,
  BadAlphaSplit,
  CaseMismatch,
  // estimators
  NonpositiveOrderStat,
  DegenerateSpacing,
  NegativeRatio,
  EmptyRange,
  // preprocessing
  UnimputableDay,
  ZeroDayVariance,
  InsufficientYears,
  DegenerateSeries,
};

const char* errc_name(Errc c);

// True for errors caused by unusable input data (CLI exit code 3); the
// remaining codes are numeric/precondition failures (exit code 4).
bool is_data_error(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tailband
