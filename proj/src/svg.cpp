// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#include "tailband/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "tailband/errors.hpp"

namespace tailband {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 56.0;

struct Bounds {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -std::numeric_limits<double>::infinity();
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void render_svg(const PlotDocument& doc, std::ostream& os) {
  Bounds b;
  for (const auto& p : doc.points) b.add(p.x, p.y);
  for (const auto& box : doc.light_boxes) {
    b.add(box.x_lo, box.y_lo);
    b.add(box.x_hi, box.y_hi);
  }
  for (const auto& box : doc.dark_boxes) {
    b.add(box.x_lo, box.y_lo);
    b.add(box.x_hi, box.y_hi);
  }
  if (doc.line) {
    b.add(doc.line->x_start, doc.line->y_at(doc.line->x_start));
    b.add(doc.line->x_end, doc.line->y_at(doc.line->x_end));
  }
  if (!(b.x_min < b.x_max)) {
    b.x_min -= 0.5;
    b.x_max += 0.5;
  }
  if (!(b.y_min < b.y_max)) {
    b.y_min -= 0.5;
    b.y_max += 0.5;
  }
  const double pad_x = 0.04 * (b.x_max - b.x_min);
  const double pad_y = 0.06 * (b.y_max - b.y_min);
  b.x_min -= pad_x;
  b.x_max += pad_x;
  b.y_min -= pad_y;
  b.y_max += pad_y;

  const auto sx = [&](double x) {
    return kMargin + (x - b.x_min) / (b.x_max - b.x_min) * (kWidth - 2 * kMargin);
  };
  const auto sy = [&](double y) {
    return kHeight - kMargin - (y - b.y_min) / (b.y_max - b.y_min) * (kHeight - 2 * kMargin);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"15\">"
     << doc.title << "</text>\n";

  const auto emit_boxes = [&](const std::vector<BandBox>& boxes, const char* fill,
                              const char* opacity) {
    for (const auto& box : boxes) {
      const double x = sx(box.x_lo);
      const double y = sy(box.y_hi);
      const double w = sx(box.x_hi) - x;
      const double h = sy(box.y_lo) - y;
      os << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
         << "\" height=\"" << fmt(h) << "\" fill=\"" << fill << "\" fill-opacity=\"" << opacity
         << "\"/>\n";
    }
  };
  emit_boxes(doc.light_boxes, "#9ecae1", "0.55");
  emit_boxes(doc.dark_boxes, "#3182bd", "0.55");

  if (doc.line) {
    os << "<line x1=\"" << fmt(sx(doc.line->x_start)) << "\" y1=\""
       << fmt(sy(doc.line->y_at(doc.line->x_start))) << "\" x2=\"" << fmt(sx(doc.line->x_end))
       << "\" y2=\"" << fmt(sy(doc.line->y_at(doc.line->x_end)))
       << "\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
  }

  for (const auto& p : doc.points)
    os << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y))
       << "\" r=\"1.6\" fill=\"black\"/>\n";

  // axes
  os << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kHeight - kMargin) << "\" x2=\""
     << fmt(kWidth - kMargin) << "\" y2=\"" << fmt(kHeight - kMargin)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kMargin) << "\" x2=\"" << fmt(kMargin)
     << "\" y2=\"" << fmt(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = b.x_min + i * (b.x_max - b.x_min) / 4;
    const double fy = b.y_min + i * (b.y_max - b.y_min) / 4;
    os << "<text x=\"" << fmt(sx(fx)) << "\" y=\"" << fmt(kHeight - kMargin + 18)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(fx)
       << "</text>\n";
    os << "<text x=\"" << fmt(kMargin - 8) << "\" y=\"" << fmt(sy(fy) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(fy)
       << "</text>\n";
  }
  os << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"" << fmt(kHeight - 12)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << doc.x_label
     << "</text>\n";
  os << "<text x=\"16\" y=\"" << fmt(kHeight / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        "transform=\"rotate(-90 16 "
     << fmt(kHeight / 2) << ")\">" << doc.y_label << "</text>\n";

  // legend
  double ly = kMargin + 6;
  if (!doc.light_boxes.empty()) {
    os << "<rect x=\"" << fmt(kWidth - kMargin - 150) << "\" y=\"" << fmt(ly)
       << "\" width=\"14\" height=\"10\" fill=\"#9ecae1\" fill-opacity=\"0.55\"/>"
       << "<text x=\"" << fmt(kWidth - kMargin - 132) << "\" y=\"" << fmt(ly + 9)
       << "\" font-family=\"sans-serif\" font-size=\"11\">95% band</text>\n";
    ly += 16;
  }
  if (!doc.dark_boxes.empty()) {
    os << "<rect x=\"" << fmt(kWidth - kMargin - 150) << "\" y=\"" << fmt(ly)
       << "\" width=\"14\" height=\"10\" fill=\"#3182bd\" fill-opacity=\"0.55\"/>"
       << "<text x=\"" << fmt(kWidth - kMargin - 132) << "\" y=\"" << fmt(ly + 9)
       << "\" font-family=\"sans-serif\" font-size=\"11\">90% band</text>\n";
    ly += 16;
  }
  if (doc.line) {
    os << "<line x1=\"" << fmt(kWidth - kMargin - 150) << "\" y1=\"" << fmt(ly + 5) << "\" x2=\""
       << fmt(kWidth - kMargin - 136) << "\" y2=\"" << fmt(ly + 5)
       << "\" stroke=\"#d62728\" stroke-dasharray=\"6 4\"/>"
       << "<text x=\"" << fmt(kWidth - kMargin - 132) << "\" y=\"" << fmt(ly + 9)
       << "\" font-family=\"sans-serif\" font-size=\"11\">reference line</text>\n";
  }
  os << "</svg>\n";
}

void render_svg_file(const PlotDocument& doc, const std::string& path) {
  std::ofstream os(path);
  if (!os) fail(Errc::IoError, "cannot open '" + path + "' for writing");
  render_svg(doc, os);
}

}  // namespace tailband
