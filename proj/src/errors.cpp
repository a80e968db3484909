// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/errors.hpp"

namespace tailband {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IoError: return "IoError";
    case Errc::ParseError: return "ParseError";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::NoExceedance: return "NoExceedance";
    case Errc::BadTruncation: return "BadTruncation";
    case Errc::NonpositiveNormalizer: return "NonpositiveNormalizer";
    case Errc::DegenerateNormalizer: return "DegenerateNormalizer";
    case Errc::BadXi: return "BadXi";
    case Errc::OutOfSupport: return "OutOfSupport";
    case Errc::InfiniteMean: return "InfiniteMean";
    case Errc::BadParam: return "BadParam";
    case Errc::GridTooCoarse: return "GridTooCoarse";
    case Errc::IncompatibleCase: return "IncompatibleCase";
    case Errc::NotCovered: return "NotCovered";
    case Errc::QuantileMismatch: return "QuantileMismatch";
    case Errc::BadAlphaSplit: return "BadAlphaSplit";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::NonpositiveOrderStat: return "NonpositiveOrderStat";
    case Errc::DegenerateSpacing: return "DegenerateSpacing";
    case Errc::NegativeRatio: return "NegativeRatio";
    case Errc::EmptyRange: return "EmptyRange";
    case Errc::UnimputableDay: return "UnimputableDay";
    case Errc::ZeroDayVariance: return "ZeroDayVariance";
    case Errc::InsufficientYears: return "InsufficientYears";
    case Errc::DegenerateSeries: return "DegenerateSeries";
  }
  return "UnknownError";
}

bool is_data_error(Errc c) {
  switch (c) {
    case Errc::IoError:
    case Errc::ParseError:
    case Errc::NonFiniteValue:
    case Errc::UnimputableDay:
    case Errc::InsufficientYears:
      return true;
    default:
      return false;
  }
}

}  // namespace tailband
