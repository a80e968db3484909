// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "tailband/csv.hpp"
#include "tailband/errors.hpp"
#include "tailband/svg.hpp"

using namespace tailband;

TEST_CASE("full-precision doubles survive a text round trip") {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> unif(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = unif(gen) * std::pow(10.0, static_cast<int>(gen() % 20) - 10);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(std::stod(format_double(0.1)) == 0.1);
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("numeric column loading") {
  SUBCASE("headerless single column") {
    std::istringstream in("4\n3\n2\n1\n");
    CHECK(load_numeric_column(in, "1") == std::vector<double>{4, 3, 2, 1});
  }
  SUBCASE("header by name, comma separated") {
    std::istringstream in("date,value\n1,10\n2,20\n");
    CHECK(load_numeric_column(in, "value") == std::vector<double>{10, 20});
  }
  SUBCASE("header by index") {
    std::istringstream in("a,b\n1,10\n2,20\n");
    CHECK(load_numeric_column(in, "2") == std::vector<double>{10, 20});
  }
  SUBCASE("whitespace separated") {
    std::istringstream in("1 10\n2 20\n");
    CHECK(load_numeric_column(in, "2") == std::vector<double>{10, 20});
  }
  SUBCASE("empty input is a parse error") {
    std::istringstream in("");
    try {
      load_numeric_column(in, "1");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
  SUBCASE("non-numeric cell names its line") {
    std::istringstream in("1\n2\nbogus\n4\n");
    try {
      load_numeric_column(in, "1");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("non-finite cells are data errors") {
    std::istringstream in("1\ninf\n3\n");
    try {
      load_numeric_column(in, "1");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
  SUBCASE("missing column on a row") {
    std::istringstream in("1,2\n3\n");
    CHECK_THROWS_AS(load_numeric_column(in, "2"), Error);
  }
  SUBCASE("name lookup without header") {
    std::istringstream in("1\n2\n3\n");
    try {
      load_numeric_column(in, "value");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}

TEST_CASE("time series loading with gaps") {
  std::istringstream in(
      "date,value\n"
      "2001-01-01,1.5\n"
      "2001-01-02,NA\n"
      "2001-01-03,\n"
      "2001-01-04,2.5\n");
  const TimeSeries ts = load_time_series(in, "date", "value");
  REQUIRE(ts.size() == 4);
  CHECK(ts.missing == std::set<std::size_t>{1, 2});
  CHECK(ts.values[0] == 1.5);
  CHECK(std::isnan(ts.values[1]));
  CHECK(ts.dates[3].to_string() == "2001-01-04");

  SUBCASE("out-of-order dates rejected") {
    std::istringstream bad("2001-01-02,1\n2001-01-01,2\n");
    CHECK_THROWS_AS(load_time_series(bad, "1", "2"), Error);
  }
}

TEST_CASE("csv writer round trip at full precision") {
  const std::vector<std::vector<double>> rows{{1.0 / 3.0, 2.0 / 7.0}, {1e-300, 12345.678901234567}};
  std::ostringstream os;
  write_csv(os, {"x", "y"}, rows);
  std::istringstream in(os.str());
  CHECK(load_numeric_column(in, "x") == std::vector<double>{1.0 / 3.0, 1e-300});
  std::istringstream in2(os.str());
  CHECK(load_numeric_column(in2, "y") == std::vector<double>{2.0 / 7.0, 12345.678901234567});
}

TEST_CASE("svg rendering is deterministic and well formed") {
  PlotDocument doc;
  doc.title = "panel";
  doc.points = {{0.1, 1.0}, {0.5, 1.1}, {1.0, 0.9}};
  doc.light_boxes = {{0.05, 0.15, 0.9, 1.1}};
  doc.dark_boxes = {{0.45, 0.55, 1.0, 1.2}};
  ReferenceLine line;
  line.x_start = 0.0;
  line.x_end = 1.2;
  line.slope = 0.0;
  line.intercept = 1.0;
  doc.line = line;

  std::ostringstream a, b;
  render_svg(doc, a);
  render_svg(doc, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("<svg") == 0);
  CHECK(a.str().find("</svg>") != std::string::npos);
  CHECK(a.str().find("stroke-dasharray") != std::string::npos);  // dashed reference
  CHECK(a.str().find("#9ecae1") != std::string::npos);           // light shade
  CHECK(a.str().find("#3182bd") != std::string::npos);           // dark shade
}
