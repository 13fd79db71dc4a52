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

#ifndef CARKIN_SCENARIO_HPP_
#define CARKIN_SCENARIO_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include "carkin/bundle.hpp"
#include "carkin/transport.hpp"

namespace carkin {

/// Raised when a scenario file does not match the schema; `field` names the
/// offending entry (e.g. "program[2].delta").
struct ScenarioError : std::runtime_error {
  std::string field;
  ScenarioError(std::string field_in, const std::string& what_in)
      : std::runtime_error("scenario field '" + field_in + "': " + what_in),
        field(std::move(field_in)) {}
};

/// One simulation request: car, start configuration, program, step and an
/// optional steering-angle bound enforced along the run.
struct Scenario {
  CarParams<double> params{1.0, 1.0};
  Configuration<double> initial;
  DriverProgram<double> program;
  double step{1e-3};
  std::optional<double> steering_limit;
};

/// Parses the JSON scenario text. Schema:
///   {"params": {"R": 1.0, "l": 2.0},
///    "initial": {"alpha": 0, "beta": 0, "x": 0, "y": 0, "phi": 0},
///    "program": [{"op": "drive", "delta": 0.5},
///                {"op": "steer", "delta": 0.3},
///                {"op": "rates", "alpha_dot": 1.0, "beta_dot": 0.0, "duration": 2.0}],
///    "step": 0.001,
///    "steering_limit": 0.8}        // optional
/// Throws ScenarioError on any violation.
Scenario parse_scenario(const std::string& text);

/// Reads and parses a scenario file. Throws ScenarioError (field "(file)")
/// when the file cannot be read.
Scenario load_scenario(const std::string& path);

struct SteeringLimitBreach {
  double time;
  double steering_angle;
};

/// First time at which the program drives |steering angle| past the
/// scenario's limit, if any. Exact: the angle is piecewise affine in time.
std::optional<SteeringLimitBreach> find_steering_breach(const Scenario& s);

}  // namespace carkin

#endif  // CARKIN_SCENARIO_HPP_
