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

#include "carkin/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace carkin {

namespace {

using nlohmann::json;

double require_number(const json& parent, const std::string& key,
                      const std::string& path) {
  if (!parent.contains(key)) {
    throw ScenarioError(path, "missing");
  }
  const json& v = parent.at(key);
  if (!v.is_number()) {
    throw ScenarioError(path, "must be a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ScenarioError(path, "must be finite");
  }
  return x;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("(json)", e.what());
  }
  if (!j.is_object()) {
    throw ScenarioError("(root)", "must be an object");
  }

  Scenario s;

  if (!j.contains("params") || !j["params"].is_object()) {
    throw ScenarioError("params", "missing or not an object");
  }
  const double radius = require_number(j["params"], "R", "params.R");
  const double length = require_number(j["params"], "l", "params.l");
  if (radius <= 0) throw ScenarioError("params.R", "must be positive");
  if (length <= 0) throw ScenarioError("params.l", "must be positive");
  s.params = CarParams<double>(radius, length);

  if (!j.contains("initial") || !j["initial"].is_object()) {
    throw ScenarioError("initial", "missing or not an object");
  }
  const json& init = j["initial"];
  s.initial.shape.wheel_angle = require_number(init, "alpha", "initial.alpha");
  s.initial.shape.steering_angle = require_number(init, "beta", "initial.beta");
  s.initial.pose.x = require_number(init, "x", "initial.x");
  s.initial.pose.y = require_number(init, "y", "initial.y");
  s.initial.pose.heading = require_number(init, "phi", "initial.phi");

  if (!j.contains("program") || !j["program"].is_array()) {
    throw ScenarioError("program", "missing or not an array");
  }
  std::size_t idx = 0;
  for (const json& seg : j["program"]) {
    const std::string path = "program[" + std::to_string(idx) + "]";
    if (!seg.is_object() || !seg.contains("op") || !seg["op"].is_string()) {
      throw ScenarioError(path + ".op", "missing or not a string");
    }
    const std::string op = seg["op"].get<std::string>();
    if (op == "drive") {
      s.program.drive(require_number(seg, "delta", path + ".delta"));
    } else if (op == "steer") {
      s.program.steer(require_number(seg, "delta", path + ".delta"));
    } else if (op == "rates") {
      const double wheel_rate = require_number(seg, "alpha_dot", path + ".alpha_dot");
      const double steer_rate = require_number(seg, "beta_dot", path + ".beta_dot");
      const double duration = require_number(seg, "duration", path + ".duration");
      if (duration < 0) throw ScenarioError(path + ".duration", "must be >= 0");
      s.program.rates(wheel_rate, steer_rate, duration);
    } else {
      throw ScenarioError(path + ".op", "must be 'drive', 'steer' or 'rates'");
    }
    ++idx;
  }

  s.step = require_number(j, "step", "step");
  if (s.step <= 0) throw ScenarioError("step", "must be positive");

  if (j.contains("steering_limit")) {
    const double lim = require_number(j, "steering_limit", "steering_limit");
    if (lim <= 0) throw ScenarioError("steering_limit", "must be positive");
    s.steering_limit = lim;
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("(file)", "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::optional<SteeringLimitBreach> find_steering_breach(const Scenario& s) {
  if (!s.steering_limit) return std::nullopt;
  const double limit = *s.steering_limit;

  double t0 = 0;
  double beta = s.initial.shape.steering_angle;
  if (std::abs(beta) > limit) {
    return SteeringLimitBreach{0.0, beta};
  }
  for (const Segment<double>& seg : s.program.segments) {
    const Rates<double> r = DriverProgram<double>::as_rates(seg);
    const double beta_end = beta + r.steer_rate * r.duration;
    // Affine in time within a segment, so the first crossing is where the
    // rate carries the angle past +/- limit.
    if (std::abs(beta_end) > limit) {
      const double target = r.steer_rate > 0 ? limit : -limit;
      const double dt = (target - beta) / r.steer_rate;
      return SteeringLimitBreach{t0 + dt, target};
    }
    beta = beta_end;
    t0 += r.duration;
  }
  return std::nullopt;
}

}  // namespace carkin
