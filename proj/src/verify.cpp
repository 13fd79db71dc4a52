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

#include "carkin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "carkin/carkin.hpp"

namespace carkin {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Configuration<double> random_config(Rng& rng) {
  Configuration<double> p;
  p.shape.wheel_angle = uniform(rng, -1.2, 1.2);
  p.shape.steering_angle = uniform(rng, -1.2, 1.2);
  p.pose.x = uniform(rng, -2, 2);
  p.pose.y = uniform(rng, -2, 2);
  p.pose.heading = uniform(rng, -3, 3);
  return p;
}

ConfigTangent<double> random_tangent(Rng& rng) {
  ConfigTangent<double> v;
  v.d_wheel = uniform(rng, -1.5, 1.5);
  v.d_steer = uniform(rng, -1.5, 1.5);
  v.d_x = uniform(rng, -1.5, 1.5);
  v.d_y = uniform(rng, -1.5, 1.5);
  v.d_heading = uniform(rng, -1.5, 1.5);
  return v;
}

GroupElement<double> random_group(Rng& rng) {
  GroupElement<double> g;
  g.angle = uniform(rng, -3, 3);
  g.translation = PlanePoint<double>(uniform(rng, -2, 2), uniform(rng, -2, 2));
  return g;
}

AlgebraElement<double> random_algebra(Rng& rng) {
  AlgebraElement<double> c;
  c.spin = uniform(rng, -1.5, 1.5);
  c.drift = PlanePoint<double>(uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5));
  return c;
}

double group_gap(const GroupElement<double>& a, const GroupElement<double>& b) {
  return std::max<double>(
      angle_distance(a.angle, b.angle),
      (a.translation - b.translation).lpNorm<Eigen::Infinity>());
}

struct Collector {
  std::optional<double> override_tol;
  std::vector<VerifyCheck> checks;

  void bound(const std::string& name, double measured, double tol) {
    const double t = override_tol.value_or(tol);
    checks.push_back({name, VerifyCheck::Kind::kUpperBound, measured, t, measured <= t});
  }
  void order(const std::string& name, double measured, double min_order) {
    checks.push_back({name, VerifyCheck::Kind::kLowerBound, measured, min_order,
                      measured >= min_order});
  }
};

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

const VerifyCheck* VerifyReport::first_failure() const {
  for (const VerifyCheck& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

VerifyReport run_verification(std::uint64_t seed,
                              std::optional<double> tolerance_override) {
  Rng rng(seed);
  Collector out;
  out.override_tol = tolerance_override;

  const CarParams<double> car(1.0, 2.0);
  constexpr double kPi = std::numbers::pi;

  // Group action is a right action and an isometry.
  {
    double worst_law = 0, worst_iso = 0;
    for (int i = 0; i < 200; ++i) {
      const GroupElement<double> g1 = random_group(rng);
      const GroupElement<double> g2 = random_group(rng);
      const PlanePoint<double> p(uniform(rng, -2, 2), uniform(rng, -2, 2));
      const PlanePoint<double> q(uniform(rng, -2, 2), uniform(rng, -2, 2));
      const PlanePoint<double> via_product = act_on_point(compose(g1, g2), p);
      const PlanePoint<double> via_steps = act_on_point(g2, act_on_point(g1, p));
      worst_law = std::max(worst_law,
                           (via_product - via_steps).lpNorm<Eigen::Infinity>());
      const double before = (p - q).norm();
      const double after = (act_on_point(g1, p) - act_on_point(g1, q)).norm();
      worst_iso = std::max(worst_iso, std::abs(before - after));
    }
    out.bound("group-action-composition", worst_law, 1e-10);
    out.bound("plane-isometry", worst_iso, 1e-12);
  }

  // Bracket antisymmetry and the Jacobi identity.
  {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      const AlgebraElement<double> a = random_algebra(rng);
      const AlgebraElement<double> b = random_algebra(rng);
      const AlgebraElement<double> c = random_algebra(rng);
      worst = std::max(worst, (bracket(a, b) + bracket(b, a)).max_abs());
      const AlgebraElement<double> jacobi = bracket(a, bracket(b, c)) +
                                            bracket(b, bracket(c, a)) +
                                            bracket(c, bracket(a, b));
      worst = std::max(worst, jacobi.max_abs());
    }
    out.bound("algebra-bracket-identities", worst, 1e-12);
  }

  // exp restricted to one generator is a one-parameter subgroup.
  {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      const AlgebraElement<double> c = random_algebra(rng);
      const double s = uniform(rng, -2, 2);
      const double t = uniform(rng, -2, 2);
      worst = std::max(worst, group_gap(carkin::exp(c, s + t),
                                        compose(carkin::exp(c, s), carkin::exp(c, t))));
    }
    out.bound("exp-one-parameter-law", worst, 1e-10);
  }

  // Fundamental fields differentiate the action.
  {
    const double h = 1e-5;
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const AlgebraElement<double> c = random_algebra(rng);
      const Configuration<double> p = random_config(rng);
      const Configuration<double> plus = act_on_configuration(carkin::exp(c, h), p);
      const Configuration<double> minus = act_on_configuration(carkin::exp(c, -h), p);
      const ConfigTangent<double> fd{
          0, 0, (plus.pose.x - minus.pose.x) / (2 * h),
          (plus.pose.y - minus.pose.y) / (2 * h),
          (plus.pose.heading - minus.pose.heading) / (2 * h)};
      worst = std::max(worst, (fd - fundamental_field(c, p)).max_abs());
    }
    out.bound("fundamental-field-flow", worst, 1e-8);
  }

  // The two routes to the connection agree everywhere sampled.
  {
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const Configuration<double> p = random_config(rng);
      const ConfigTangent<double> v = random_tangent(rng);
      worst = std::max(worst, (connection_form(p, v, car) -
                               connection_via_gauge_transform(p, v, car))
                                  .max_abs());
    }
    out.bound("connection-two-routes", worst, 1e-12);
  }

  // The connection reproduces generators and kills lifts.
  {
    double worst_rep = 0, worst_horiz = 0, worst_pullback = 0;
    for (int i = 0; i < 200; ++i) {
      const Configuration<double> p = random_config(rng);
      const AlgebraElement<double> c = random_algebra(rng);
      worst_rep = std::max(
          worst_rep,
          (connection_form(p, fundamental_field(c, p), car) - c).max_abs());
      const ShapeTangent<double> w{uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5)};
      worst_horiz = std::max(
          worst_horiz, connection_form(p, horizontal_lift(p, w, car), car).max_abs());
      const ConfigTangent<double> section_dir{w.d_wheel, w.d_steer, 0, 0, 0};
      worst_pullback = std::max(
          worst_pullback,
          (gauge_potential(project(p), w, car) -
           connection_form(section(project(p)), section_dir, car))
              .max_abs());
    }
    out.bound("connection-reproduces-generators", worst_rep, 1e-12);
    out.bound("lift-horizontality", worst_horiz, 1e-12);
    out.bound("gauge-pullback-consistency", worst_pullback, 1e-12);
  }

  // Curvature against the finite-difference structure equation, and against
  // the commutator of lifted directions.
  {
    double worst_structure = 0, worst_bracket = 0;
    for (int i = 0; i < 100; ++i) {
      const Configuration<double> p = random_config(rng);
      const ConfigTangent<double> ha = horizontal_lift(p, {1, 0}, car);
      const ConfigTangent<double> hb = horizontal_lift(p, {0, 1}, car);
      worst_structure = std::max(
          worst_structure, (curvature(p, ha, hb, car) -
                            curvature_via_structure_equation(p, ha, hb, car))
                               .max_abs());
      const ConfigTangent<double> v1 = random_tangent(rng);
      const ConfigTangent<double> v2 = random_tangent(rng);
      worst_structure = std::max(
          worst_structure, (curvature(p, v1, v2, car) -
                            curvature_via_structure_equation(p, v1, v2, car))
                               .max_abs());
      const ConfigTangent<double> via_field =
          fundamental_field(-curvature(p, ha, hb, car), p);
      worst_bracket =
          std::max(worst_bracket, (drive_steer_bracket(p, car) - via_field).max_abs());
    }
    out.bound("structure-equation", worst_structure, 1e-6);
    out.bound("bracket-curvature", worst_bracket, 1e-12);
  }

  // Flow-cycle estimates converge to the analytic commutator at second order
  // after one Richardson step.
  {
    const Configuration<double> p = random_config(rng);
    const ConfigTangent<double> analytic = drive_steer_bracket(p, car);
    const std::vector<double> ladder{0.08, 0.04, 0.02};
    std::vector<double> errs;
    for (const double e : ladder) {
      const ConfigTangent<double> coarse =
          commutator_defect(p, {1.0, 0.0}, {0.0, 1.0}, e, car, 1e-4);
      const ConfigTangent<double> fine =
          commutator_defect(p, {1.0, 0.0}, {0.0, 1.0}, e / 2, car, 1e-4);
      const ConfigTangent<double> extrapolated = 2.0 * fine - coarse;
      errs.push_back((extrapolated - analytic).max_abs());
    }
    out.order("flow-bracket-order", fit_order(ladder, errs), 1.8);
  }

  // Holonomy orders of the three cycles.
  {
    const Configuration<double> p{{0.1, 0.25}, {0.3, -0.2, 0.4}};
    const std::vector<double> ladder{0.1, 0.05, 0.025};
    std::vector<double> simple_err, sideways_err, slip_err;
    for (const double e : ladder) {
      simple_err.push_back(pose_distance(simple_cycle(p, e, car, 1e-3).pose,
                                         predict_simple_cycle(p, e, car).pose));
      sideways_err.push_back(pose_distance(sideways_cycle(p, e, car, 1e-3).pose,
                                           predict_sideways(p, e, car).pose));
      Configuration<double> slip_predicted = p;
      slip_predicted.pose = fixed_steer_closed_form(
          p.shape.steering_angle, -e * e * e * e, p.pose, car);
      slip_err.push_back(pose_distance(slip_cycle(p, e, car, 1e-3).pose,
                                       slip_predicted.pose));
    }
    out.order("simple-cycle-order", fit_order(ladder, simple_err), 2.8);
    out.order("sideways-cycle-order", fit_order(ladder, sideways_err), 4.8);
    out.order("slip-cycle-order", fit_order(ladder, slip_err), 4.8);
  }

  // Transport against the fixed-steer closed form, horizontality along the
  // way, and exact shape bookkeeping.
  {
    double worst_end = 0, worst_omega = 0, worst_shape = 0;
    for (const double beta0 : {0.3, 0.7, 1.2}) {
      Configuration<double> p0;
      p0.shape.steering_angle = beta0;
      DriverProgram<double> prog;
      prog.drive(2 * kPi);
      const Trajectory<double> traj = integrate(prog, p0, car, 1e-3);
      const Pose<double> closed =
          fixed_steer_closed_form(beta0, 2 * kPi, p0.pose, car);
      worst_end = std::max(worst_end, pose_distance(traj.endpoint().pose, closed));
      for (const TrajectorySample<double>& s : traj.samples) {
        worst_omega = std::max(
            worst_omega,
            connection_form(s.config, transport_derivative(s.config, 1.0, 0.0, car), car)
                .max_abs());
      }
      worst_shape = std::max(
          worst_shape,
          std::abs(traj.endpoint().shape.wheel_angle - (p0.shape.wheel_angle + 2 * kPi)));
    }
    out.bound("fixed-steer-agreement", worst_end, 1e-8);
    out.bound("trajectory-horizontality", worst_omega, 1e-9);
    out.bound("shape-exactness", worst_shape, 1e-12);
  }

  // Integrator order on a fast-turning car (the gentle instances sit on the
  // roundoff floor at these steps).
  {
    const CarParams<double> stiff(4.0, 0.25);
    Configuration<double> p0;
    p0.shape.steering_angle = 1.3;
    const Pose<double> closed = fixed_steer_closed_form(1.3, 1.0, p0.pose, stiff);
    const std::vector<double> steps{4e-3, 2e-3, 1e-3};
    std::vector<double> errs;
    for (const double st : steps) {
      DriverProgram<double> prog;
      prog.drive(1.0);
      errs.push_back(pose_distance(integrate(prog, p0, stiff, st).endpoint().pose, closed));
    }
    out.order("integrator-order", fit_order(steps, errs), 3.8);
  }

  // Reparametrized programs land on the same endpoint; transported starts
  // commute with the group action.
  {
    const Configuration<double> p = random_config(rng);
    DriverProgram<double> slow, fast;
    slow.rates(1.0, 0.3, 1.7);
    fast.rates(2.0, 0.6, 0.85);
    const double reparam =
        config_distance(integrate(slow, p, car, 1e-3).endpoint(),
                        integrate(fast, p, car, 1e-3).endpoint());
    out.bound("reparametrization-invariance", reparam, 1e-10);

    const GroupElement<double> g = random_group(rng);
    DriverProgram<double> prog;
    prog.drive(0.9).steer(0.4).drive(-0.5);
    const Configuration<double> moved_then_run =
        integrate(prog, act_on_configuration(g, p), car, 1e-3).endpoint();
    const Configuration<double> run_then_moved =
        act_on_configuration(g, integrate(prog, p, car, 1e-3).endpoint());
    out.bound("transport-equivariance",
              config_distance(moved_then_run, run_then_moved), 1e-8);
  }

  // Heading field: transformation law and the covariant first-order change.
  {
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      worst = std::max(worst,
                       equivariance_defect(random_group(rng), random_config(rng)));
    }
    out.bound("heading-equivariance", worst, 1e-12);

    const Shape<double> m{0.0, 0.6};
    const std::vector<double> deltas{2e-3, 1e-3, 5e-4};
    std::vector<double> errs;
    for (const double da : deltas) {
      DriverProgram<double> prog;
      prog.drive(da);
      const Configuration<double> end =
          integrate(prog, section(m), car, da / 50).endpoint();
      const HeadingVector<double> fd =
          heading_direction(end) - heading_direction(section(m));
      errs.push_back(
          (fd - covariant_change(m, da, car)).lpNorm<Eigen::Infinity>());
    }
    out.order("covariant-change-order", fit_order(deltas, errs), 1.8);
  }

  // Parking planner end to end.
  {
    const CarParams<double> unit(1.0, 1.0);
    const Configuration<double> p0;
    const double lateral = 1e-3, eps = 0.1;
    const DriverProgram<double> plan = plan_parallel_park(p0, lateral, eps, unit);
    const Configuration<double> end = integrate(plan, p0, unit, 1e-3).endpoint();
    const double offset = -std::sin(p0.pose.heading) * (end.pose.x - p0.pose.x) +
                          std::cos(p0.pose.heading) * (end.pose.y - p0.pose.y);
    const double rel = std::abs(offset - (-lateral)) / lateral;
    out.bound("parking-planner-offset", rel, 0.05);
  }

  VerifyReport report;
  report.seed = seed;
  report.checks = std::move(out.checks);
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "verification (seed %llu)\n",
                static_cast<unsigned long long>(report.seed));
  os << line;
  int idx = 1;
  for (const VerifyCheck& c : report.checks) {
    const char* rel = c.kind == VerifyCheck::Kind::kUpperBound ? "<=" : ">=";
    std::snprintf(line, sizeof line, "[%2d] %-4s %-34s measured %12.5e  (%s %g)\n",
                  idx++, c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                  rel, c.threshold);
    os << line;
  }
  std::size_t passed = 0;
  for (const VerifyCheck& c : report.checks) {
    if (c.pass) ++passed;
  }
  std::snprintf(line, sizeof line, "summary: %zu/%zu passed\n", passed,
                report.checks.size());
  os << line;
  return os.str();
}

}  // namespace carkin
