// Copyright 2026 The carkin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carkin/trajectory_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace carkin {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Short fixed form for SVG coordinates.
std::string fmt6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

std::string trajectory_to_csv(const Trajectory<double>& traj) {
  std::string out = "t,alpha,beta,x,y,phi\n";
  for (const TrajectorySample<double>& s : traj.samples) {
    out += fmt17(s.t);
    out += ',';
    out += fmt17(s.config.shape.wheel_angle);
    out += ',';
    out += fmt17(s.config.shape.steering_angle);
    out += ',';
    out += fmt17(s.config.pose.x);
    out += ',';
    out += fmt17(s.config.pose.y);
    out += ',';
    out += fmt17(s.config.pose.heading);
    out += '\n';
  }
  return out;
}

Trajectory<double> trajectory_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "t,alpha,beta,x,y,phi") {
    throw std::runtime_error("trajectory csv: bad header");
  }
  Trajectory<double> traj;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double v[6];
    std::string cell;
    for (int i = 0; i < 6; ++i) {
      if (!std::getline(row, cell, ',')) {
        throw std::runtime_error("trajectory csv: short row '" + line + "'");
      }
      v[i] = std::stod(cell);
    }
    TrajectorySample<double> s;
    s.t = v[0];
    s.config.shape.wheel_angle = v[1];
    s.config.shape.steering_angle = v[2];
    s.config.pose.x = v[3];
    s.config.pose.y = v[4];
    s.config.pose.heading = v[5];
    traj.samples.push_back(s);
  }
  if (traj.samples.empty()) {
    throw std::runtime_error("trajectory csv: no samples");
  }
  return traj;
}

std::string trajectory_to_svg(const Trajectory<double>& traj,
                              std::size_t tick_stride) {
  double min_x = traj.samples.front().config.pose.x;
  double max_x = min_x;
  double min_y = traj.samples.front().config.pose.y;
  double max_y = min_y;
  for (const TrajectorySample<double>& s : traj.samples) {
    min_x = std::min(min_x, s.config.pose.x);
    max_x = std::max(max_x, s.config.pose.x);
    min_y = std::min(min_y, s.config.pose.y);
    max_y = std::max(max_y, s.config.pose.y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-6});
  const double pad = 0.05 * span;
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;

  // Plane y grows upward; SVG y grows downward. Emit flipped coordinates.
  const auto flip = [&](double y) { return (max_y + min_y) - y; };

  if (tick_stride == 0) {
    tick_stride = std::max<std::size_t>(1, traj.samples.size() / 40);
  }
  const double tick_len = 0.03 * span;
  const double marker_r = 0.015 * span;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << fmt6(min_x) << ' ' << fmt6(min_y) << ' ' << fmt6(max_x - min_x) << ' '
      << fmt6(max_y - min_y) << "\">\n";

  svg << "  <polyline fill=\"none\" stroke=\"#1f3a93\" stroke-width=\""
      << fmt6(0.004 * span) << "\" points=\"";
  for (const TrajectorySample<double>& s : traj.samples) {
    svg << fmt6(s.config.pose.x) << ',' << fmt6(flip(s.config.pose.y)) << ' ';
  }
  svg << "\"/>\n";

  for (std::size_t i = 0; i < traj.samples.size(); i += tick_stride) {
    const Pose<double>& e = traj.samples[i].config.pose;
    const double dx = tick_len * std::cos(e.heading);
    const double dy = tick_len * std::sin(e.heading);
    svg << "  <line stroke=\"#999999\" stroke-width=\"" << fmt6(0.002 * span)
        << "\" x1=\"" << fmt6(e.x) << "\" y1=\"" << fmt6(flip(e.y)) << "\" x2=\""
        << fmt6(e.x + dx) << "\" y2=\"" << fmt6(flip(e.y + dy)) << "\"/>\n";
  }

  const Pose<double>& first = traj.samples.front().config.pose;
  const Pose<double>& last = traj.samples.back().config.pose;
  svg << "  <circle fill=\"#2e8b57\" cx=\"" << fmt6(first.x) << "\" cy=\""
      << fmt6(flip(first.y)) << "\" r=\"" << fmt6(marker_r) << "\"/>\n";
  svg << "  <circle fill=\"#b22222\" cx=\"" << fmt6(last.x) << "\" cy=\""
      << fmt6(flip(last.y)) << "\" r=\"" << fmt6(marker_r) << "\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write to '" + path + "' failed");
  }
}

}  // namespace carkin
