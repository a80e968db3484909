// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tailband/bands.hpp"
#include "tailband/sample.hpp"

namespace tailband {

// Renderable description of one ME-plot panel.  Shading follows the fixed
// convention: the 95% band (alpha = 0.05) is the light shade, the 90% band
// (alpha = 0.10) the dark one; reference lines are dashed.
struct PlotDocument {
  std::string title;
  std::string x_label = "x";
  std::string y_label = "mean excess";
  std::vector<MEPoint> points;
  std::vector<BandBox> light_boxes;  // 95%
  std::vector<BandBox> dark_boxes;   // 90%
  std::optional<ReferenceLine> line;
};

void render_svg(const PlotDocument& doc, std::ostream& os);
void render_svg_file(const PlotDocument& doc, const std::string& path);

}  // namespace tailband
