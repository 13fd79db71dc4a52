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

// Command-line front end: simulate scenario files, synthesize parking
// maneuvers, evaluate the fixed-steer closed form and run the verification
// suite.
//
// Exit codes: 0 success, 1 failed verification or unmet planner contract,
// 2 bad arguments or scenario schema violation, 3 steering-limit breach,
// 4 parking cycle cap exceeded.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "carkin/carkin.hpp"
#include "carkin/scenario.hpp"
#include "carkin/trajectory_io.hpp"
#include "carkin/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSteeringLimit = 3;
constexpr int kExitCycleCap = 4;

void emit_outputs(const carkin::Trajectory<double>& traj,
                  const std::string& csv_path, const std::string& svg_path) {
  const std::string csv = carkin::trajectory_to_csv(traj);
  if (csv_path.empty()) {
    std::cout << csv;
  } else {
    carkin::write_text_file(csv_path, csv);
  }
  if (!svg_path.empty()) {
    carkin::write_text_file(svg_path, carkin::trajectory_to_svg(traj));
  }
}

int run_simulate(const std::string& scenario_path, const std::string& csv_path,
                 const std::string& svg_path) {
  const carkin::Scenario scenario = carkin::load_scenario(scenario_path);
  if (const auto breach = carkin::find_steering_breach(scenario)) {
    std::fprintf(stderr, "steering limit exceeded at t=%.6g (beta=%.6g)\n",
                 breach->time, breach->steering_angle);
    return kExitSteeringLimit;
  }
  const carkin::Trajectory<double> traj = carkin::integrate(
      scenario.program, scenario.initial, scenario.params, scenario.step);
  emit_outputs(traj, csv_path, svg_path);
  return kExitOk;
}

int run_park(double wheel_radius, double rod_length, double alpha, double beta,
             double x, double y, double phi, double lateral, double eps,
             double step, std::size_t cycle_cap, const std::string& csv_path,
             const std::string& svg_path) {
  const carkin::CarParams<double> car(wheel_radius, rod_length);
  carkin::Configuration<double> start;
  start.shape.wheel_angle = alpha;
  start.shape.steering_angle = beta;
  start.pose = {x, y, phi};

  const carkin::DriverProgram<double> plan =
      carkin::plan_parallel_park(start, lateral, eps, car, cycle_cap);
  const std::size_t cycles = carkin::parking_cycle_count(lateral, eps, car);
  const double sign = lateral < 0 ? -1.0 : 1.0;
  const double per_cycle =
      eps * eps * eps * eps * car.wheel_radius * car.wheel_radius / car.rod_length;
  const double predicted = -sign * static_cast<double>(cycles) * per_cycle;

  const carkin::Trajectory<double> traj =
      carkin::integrate(plan, start, car, std::min(step, eps / 20));
  const carkin::Configuration<double>& end = traj.endpoint();
  const double achieved =
      -std::sin(phi) * (end.pose.x - x) + std::cos(phi) * (end.pose.y - y);
  const double heading_change = end.pose.heading - phi;

  std::printf("cycles:            %zu\n", cycles);
  std::printf("predicted offset:  %.12g\n", predicted);
  std::printf("achieved offset:   %.12g\n", achieved);
  std::printf("residual heading:  %.12g\n", heading_change);

  if (!csv_path.empty() || !svg_path.empty()) {
    emit_outputs(traj, csv_path, svg_path);
  }

  if (lateral == 0.0) return kExitOk;
  const double rel = std::abs(achieved - (-sign * std::abs(lateral))) / std::abs(lateral);
  const double rel_tol = std::max(0.05, 10 * eps);
  const bool ok = rel <= rel_tol &&
                  std::abs(heading_change) < 10 * eps * eps;
  if (!ok) {
    std::fprintf(stderr, "planner contract missed: rel offset error %.3g, heading %.3g\n",
                 rel, heading_change);
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_closed_form(double wheel_radius, double rod_length, double beta0,
                    double alpha, double x0, double y0, double phi0,
                    std::size_t samples, const std::string& csv_path,
                    const std::string& svg_path) {
  const carkin::CarParams<double> car(wheel_radius, rod_length);
  const carkin::Pose<double> start{x0, y0, phi0};
  const carkin::Pose<double> end =
      carkin::fixed_steer_closed_form(beta0, alpha, start, car);
  std::printf("x:   %.17g\ny:   %.17g\nphi: %.17g\n", end.x, end.y, end.heading);

  if (!csv_path.empty() || !svg_path.empty()) {
    carkin::Trajectory<double> traj;
    const std::size_t n = std::max<std::size_t>(samples, 2);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = alpha * static_cast<double>(i) / static_cast<double>(n - 1);
      carkin::TrajectorySample<double> s;
      s.t = a;
      s.config.shape.wheel_angle = a;
      s.config.shape.steering_angle = beta0;
      s.config.pose = carkin::fixed_steer_closed_form(beta0, a, start, car);
      traj.samples.push_back(s);
    }
    emit_outputs(traj, csv_path, svg_path);
  }
  return kExitOk;
}

int run_verify(std::uint64_t seed, std::optional<double> tol_override) {
  const carkin::VerifyReport report = carkin::run_verification(seed, tol_override);
  std::cout << carkin::format_report(report);
  if (!report.all_pass()) {
    std::fprintf(stderr, "verification failed: %s\n",
                 report.first_failure()->name.c_str());
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"car kinematics as parallel transport: simulate, park, verify"};
  app.require_subcommand(1);

  std::string scenario_path, csv_path, svg_path;
  double wheel_radius = 1.0, rod_length = 1.0;
  double alpha = 0, beta = 0, x = 0, y = 0, phi = 0;
  double lateral = 0, eps = 0.1, step = 1e-3;
  double beta0 = 0, alpha_span = 1.0;
  std::size_t cycle_cap = 100000, samples = 200;
  std::uint64_t seed = 12345;
  double tol_override_value = 0;

  CLI::App* simulate = app.add_subcommand("simulate", "integrate a scenario file");
  simulate->add_option("scenario", scenario_path, "scenario JSON file")->required();
  simulate->add_option("--out", csv_path, "trajectory CSV path (default: stdout)");
  simulate->add_option("--svg", svg_path, "trajectory SVG path");

  CLI::App* park = app.add_subcommand("park", "synthesize a sideways maneuver");
  park->add_option("--lateral", lateral, "requested sideways displacement")->required();
  park->add_option("--eps", eps, "cycle amplitude, in (0, 0.3]");
  park->add_option("--step", step, "integration step");
  park->add_option("--cycle-cap", cycle_cap, "maximum number of cycles");
  park->add_option("--R", wheel_radius, "wheel radius");
  park->add_option("--l", rod_length, "rod length");
  park->add_option("--alpha", alpha, "initial wheel angle");
  park->add_option("--beta", beta, "initial steering angle");
  park->add_option("--x", x, "initial x");
  park->add_option("--y", y, "initial y");
  park->add_option("--phi", phi, "initial heading");
  park->add_option("--out", csv_path, "maneuver CSV path");
  park->add_option("--svg", svg_path, "maneuver SVG path");

  CLI::App* closed = app.add_subcommand("closed-form", "fixed-steer endpoint in closed form");
  closed->add_option("--beta0", beta0, "fixed steering angle")->required();
  closed->add_option("--alpha", alpha_span, "wheel-angle advance")->required();
  closed->add_option("--R", wheel_radius, "wheel radius");
  closed->add_option("--l", rod_length, "rod length");
  closed->add_option("--x0", x, "start x");
  closed->add_option("--y0", y, "start y");
  closed->add_option("--phi0", phi, "start heading");
  closed->add_option("--samples", samples, "samples for CSV/SVG output");
  closed->add_option("--out", csv_path, "arc CSV path");
  closed->add_option("--svg", svg_path, "arc SVG path");

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--seed", seed, "random seed");
  CLI::Option* tol_opt =
      verify->add_option("--tol", tol_override_value,
                         "override every defect tolerance (orders keep their thresholds)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (simulate->parsed()) {
      return run_simulate(scenario_path, csv_path, svg_path);
    }
    if (park->parsed()) {
      return run_park(wheel_radius, rod_length, alpha, beta, x, y, phi, lateral,
                      eps, step, cycle_cap, csv_path, svg_path);
    }
    if (closed->parsed()) {
      return run_closed_form(wheel_radius, rod_length, beta0, alpha_span, x, y,
                             phi, samples, csv_path, svg_path);
    }
    if (verify->parsed()) {
      std::optional<double> tol;
      if (tol_opt->count() > 0) tol = tol_override_value;
      return run_verify(seed, tol);
    }
  } catch (const carkin::ScenarioError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  } catch (const carkin::CycleCapError& e) {
    std::fprintf(stderr, "error: plan needs %zu cycles, cap is %zu\n", e.required,
                 e.cap);
    return kExitCycleCap;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  }
  return kExitBadInput;
}
