// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "tailband/errors.hpp"

namespace tailband {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  if (line.find(',') != std::string::npos) {
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
  } else {
    std::stringstream ss(line);
    std::string cell;
    while (ss >> cell) cells.push_back(cell);
  }
  return cells;
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

bool is_missing_cell(const std::string& text) {
  std::string t = trim(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return t.empty() || t == "na" || t == "nan";
}

bool looks_like_date(const std::string& text) {
  int y, m, d;
  char tail = 0;
  return std::sscanf(trim(text).c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) == 3;
}

struct ColumnSpec {
  bool by_index = false;
  std::size_t index = 0;  // 0-based
  std::string name;
};

ColumnSpec parse_column_spec(const std::string& column) {
  ColumnSpec spec;
  if (!column.empty() && std::all_of(column.begin(), column.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    spec.by_index = true;
    const long idx = std::strtol(column.c_str(), nullptr, 10);
    if (idx < 1) fail(Errc::BadParam, "column index is 1-based");
    spec.index = static_cast<std::size_t>(idx - 1);
  } else {
    spec.name = column;
  }
  return spec;
}

struct ParsedCsv {
  std::vector<std::string> header;  // empty when the file has none
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

ParsedCsv read_rows(std::istream& is) {
  ParsedCsv out;
  std::string line;
  std::size_t lineno = 0;
  bool first_content = true;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto cells = split_line(line);
    if (first_content) {
      first_content = false;
      // Header row iff some cell is neither numeric, missing nor a date.
      double tmp;
      const bool data_like = std::all_of(cells.begin(), cells.end(), [&](const std::string& c) {
        return parse_double(c, tmp) || is_missing_cell(c) || looks_like_date(c);
      });
      if (!data_like) {
        out.header = std::move(cells);
        continue;
      }
    }
    out.rows.push_back(std::move(cells));
    out.line_numbers.push_back(lineno);
  }
  if (out.rows.empty()) fail(Errc::ParseError, "no data rows in input");
  return out;
}

std::size_t resolve_column(const ParsedCsv& csv, const ColumnSpec& spec) {
  if (spec.by_index) return spec.index;
  if (csv.header.empty())
    fail(Errc::ParseError, "column '" + spec.name + "' requested but the file has no header");
  for (std::size_t i = 0; i < csv.header.size(); ++i)
    if (csv.header[i] == spec.name) return i;
  fail(Errc::ParseError, "no column named '" + spec.name + "' in header");
}

const std::string& cell_at(const ParsedCsv& csv, std::size_t row, std::size_t col) {
  if (col >= csv.rows[row].size())
    fail(Errc::ParseError,
         "line " + std::to_string(csv.line_numbers[row]) + " has no column " +
             std::to_string(col + 1));
  return csv.rows[row][col];
}

}  // namespace

std::vector<double> load_numeric_column(std::istream& is, const std::string& column) {
  const ParsedCsv csv = read_rows(is);
  const std::size_t col = resolve_column(csv, parse_column_spec(column));
  std::vector<double> out;
  out.reserve(csv.rows.size());
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const std::string& cell = cell_at(csv, r, col);
    double v;
    if (!parse_double(cell, v))
      fail(Errc::ParseError,
           "line " + std::to_string(csv.line_numbers[r]) + ": cell '" + cell + "' is not numeric");
    if (!std::isfinite(v))
      fail(Errc::ParseError,
           "line " + std::to_string(csv.line_numbers[r]) + ": non-finite value");
    out.push_back(v);
  }
  return out;
}

TimeSeries load_time_series(std::istream& is, const std::string& date_column,
                            const std::string& value_column) {
  const ParsedCsv csv = read_rows(is);
  const std::size_t dcol = resolve_column(csv, parse_column_spec(date_column));
  const std::size_t vcol = resolve_column(csv, parse_column_spec(value_column));
  TimeSeries ts;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    ts.dates.push_back(Date::parse(cell_at(csv, r, dcol)));
    const std::string& cell = cell_at(csv, r, vcol);
    if (is_missing_cell(cell)) {
      ts.missing.insert(ts.values.size());
      ts.values.push_back(std::numeric_limits<double>::quiet_NaN());
    } else {
      double v;
      if (!parse_double(cell, v))
        fail(Errc::ParseError, "line " + std::to_string(csv.line_numbers[r]) + ": cell '" +
                                   cell + "' is not numeric");
      if (!std::isfinite(v))
        fail(Errc::ParseError,
             "line " + std::to_string(csv.line_numbers[r]) + ": non-finite value");
      ts.values.push_back(v);
    }
  }
  ts.validate();
  return ts;
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(Errc::IoError, "cannot open '" + path + "' for reading");
  return is;
}

}  // namespace

std::vector<double> load_numeric_column_file(const std::string& path,
                                             const std::string& column) {
  auto is = open_input(path);
  return load_numeric_column(is, column);
}

TimeSeries load_time_series_file(const std::string& path, const std::string& date_column,
                                 const std::string& value_column) {
  auto is = open_input(path);
  return load_time_series(is, date_column, value_column);
}

void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i)
    os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

void write_csv_file(const std::string& path, const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows) {
  std::ofstream os(path);
  if (!os) fail(Errc::IoError, "cannot open '" + path + "' for writing");
  write_csv(os, columns, rows);
}

}  // namespace tailband
