// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tailband/preprocess.hpp"

namespace tailband {

// Full-precision decimal rendering (17 significant digits): reading the
// text back reproduces the double bit-exactly.
std::string format_double(double v);

// Loads one numeric column.  `column` is a 1-based index or a header name;
// a header row is detected (and required when selecting by name).  Comma or
// whitespace delimited.  Non-finite or non-numeric cells raise ParseError
// with the offending line number.
std::vector<double> load_numeric_column(std::istream& is, const std::string& column);
std::vector<double> load_numeric_column_file(const std::string& path, const std::string& column);

// Date + value columns; empty, "na"/"nan" (any case) cells become missing
// entries.
TimeSeries load_time_series(std::istream& is, const std::string& date_column,
                            const std::string& value_column);
TimeSeries load_time_series_file(const std::string& path, const std::string& date_column,
                                 const std::string& value_column);

void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);
void write_csv_file(const std::string& path, const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows);

}  // namespace tailband
