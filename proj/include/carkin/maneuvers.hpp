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

#ifndef CARKIN_MANEUVERS_HPP_
#define CARKIN_MANEUVERS_HPP_

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "carkin/bundle.hpp"
#include "carkin/connection.hpp"
#include "carkin/transport.hpp"

namespace carkin {

/// Thrown by the parking planner when the requested displacement needs more
/// cycles than the caller allows.
struct CycleCapError : std::runtime_error {
  std::size_t required;
  std::size_t cap;
  CycleCapError(std::size_t required_in, std::size_t cap_in)
      : std::runtime_error("parking plan exceeds cycle cap"),
        required(required_in),
        cap(cap_in) {}
};

/// Bookkeeping for one executed cycle: integrated endpoint against the
/// analytic prediction. `residual` is the max pose-component deviation.
template <typename Scalar = double>
struct CycleReport {
  Configuration<Scalar> start;
  Configuration<Scalar> end;
  Configuration<Scalar> predicted_end;
  Scalar epsilon{0};
  Scalar residual{0};
};

namespace detail {

// Cycles resolve each leg with a step no coarser than eps / 20 so the
// integration error stays below the holonomy signal being measured.
template <typename Scalar>
Scalar cycle_step(Scalar step, Scalar eps) {
  if (!(step > Scalar(0))) {
    throw std::invalid_argument("cycle: step must be positive");
  }
  return eps > Scalar(0) ? std::min(step, eps / 20) : step;
}

}  // namespace detail

/// The elementary parking cycle: steer left, roll forward, steer back, roll
/// back. It closes exactly in shape space; the pose picks up a second-order
/// displacement.
template <typename Scalar>
Configuration<Scalar> simple_cycle(const Configuration<Scalar>& p, Scalar eps,
                                   const CarParams<Scalar>& k, Scalar step) {
  const Scalar h = detail::cycle_step(step, std::abs(eps));
  DriverProgram<Scalar> prog;
  prog.steer(eps).drive(eps).steer(-eps).drive(-eps);
  return integrate(prog, p, k, h).endpoint();
}

/// Second-order holonomy of the elementary cycle: lateral displacement of
/// size eps^2 R perpendicular to the front wheel plus a heading change of
/// eps^2 (R/l) cos(steer). Exact to third order in eps.
template <typename Scalar>
Configuration<Scalar> predict_simple_cycle(const Configuration<Scalar>& p,
                                           Scalar eps,
                                           const CarParams<Scalar>& k) {
  const Scalar R = k.wheel_radius;
  const Scalar b = p.shape.steering_angle;
  const Scalar phi = p.pose.heading;
  const Scalar e2 = eps * eps;
  Configuration<Scalar> out = p;
  out.pose.x -= e2 * R * std::sin(phi + b);
  out.pose.y += e2 * R * std::cos(phi + b);
  out.pose.heading += e2 * (R / k.rod_length) * std::cos(b);
  return out;
}

/// Commutator of the lifted drive and steer directions. Purely vertical:
/// the shape components vanish identically.
template <typename Scalar>
ConfigTangent<Scalar> drive_steer_bracket(const Configuration<Scalar>& p,
                                          const CarParams<Scalar>& k) {
  const Scalar R = k.wheel_radius;
  const Scalar b = p.shape.steering_angle;
  const Scalar phi = p.pose.heading;
  ConfigTangent<Scalar> v;
  v.d_x = R * std::sin(phi + b);
  v.d_y = -R * std::cos(phi + b);
  v.d_heading = -(R / k.rod_length) * std::cos(b);
  return v;
}

/// Iterated commutator of the lifted drive with drive_steer_bracket: a pure
/// translation perpendicular to the rod. This is the field the sideways
/// cycle realizes.
template <typename Scalar>
ConfigTangent<Scalar> sideways_generator(const Configuration<Scalar>& p,
                                         const CarParams<Scalar>& k) {
  const Scalar R = k.wheel_radius;
  const Scalar phi = p.pose.heading;
  ConfigTangent<Scalar> v;
  v.d_x = -(R * R / k.rod_length) * std::sin(phi);
  v.d_y = (R * R / k.rod_length) * std::cos(phi);
  return v;
}

/// Iterated commutator of the lifted steer with drive_steer_bracket: the
/// lifted drive direction with its wheel component removed. Moving along it
/// is rolling motion of the pose with a frozen wheel.
template <typename Scalar>
ConfigTangent<Scalar> slip_generator(const Configuration<Scalar>& p,
                                     const CarParams<Scalar>& k) {
  ConfigTangent<Scalar> v = horizontal_lift(p, ShapeTangent<Scalar>{Scalar(1), Scalar(0)}, k);
  v.d_wheel = Scalar(0);
  return v;
}

namespace detail {

enum class Control { kDrive, kSteer };

template <typename Scalar>
void push_move(DriverProgram<Scalar>& prog, Control which, Scalar delta) {
  if (which == Control::kDrive) {
    prog.drive(delta);
  } else {
    prog.steer(delta);
  }
}

// The ten-move iterated cycle: the four-move (w, z) cycle and its reverse,
// conjugated around +/- eps^2 moves of u. Its holonomy is the iterated
// commutator of u with the (w, z) commutator, scaled by -eps^4.
template <typename Scalar>
DriverProgram<Scalar> iterated_cycle_program(Control u, Control w, Control z,
                                             Scalar eps, Scalar steer_sign) {
  const Scalar zs = steer_sign;
  const auto signed_delta = [&](Control c, Scalar d) {
    return c == Control::kSteer ? zs * d : d;
  };
  const Scalar e2 = eps * eps;
  DriverProgram<Scalar> prog;
  push_move(prog, u, signed_delta(u, e2));
  push_move(prog, z, signed_delta(z, eps));
  push_move(prog, w, signed_delta(w, eps));
  push_move(prog, z, signed_delta(z, -eps));
  push_move(prog, w, signed_delta(w, -eps));
  push_move(prog, u, signed_delta(u, -e2));
  push_move(prog, w, signed_delta(w, eps));
  push_move(prog, z, signed_delta(z, eps));
  push_move(prog, w, signed_delta(w, -eps));
  push_move(prog, z, signed_delta(z, -eps));
  return prog;
}

}  // namespace detail

/// The ten-move program whose net effect is a sideways translation of the
/// pose. `mirrored` flips every steer move, which flips the direction of
/// the translation.
template <typename Scalar>
DriverProgram<Scalar> sideways_cycle_program(Scalar eps, bool mirrored = false) {
  return detail::iterated_cycle_program(detail::Control::kDrive,
                                        detail::Control::kDrive,
                                        detail::Control::kSteer, eps,
                                        mirrored ? Scalar(-1) : Scalar(1));
}

/// Executes the sideways cycle. Shape returns to the start; the pose
/// translates perpendicular to the rod by eps^4 R^2 / l to fifth order.
template <typename Scalar>
Configuration<Scalar> sideways_cycle(const Configuration<Scalar>& p, Scalar eps,
                                     const CarParams<Scalar>& k, Scalar step) {
  const Scalar h = detail::cycle_step(step, std::abs(eps));
  return integrate(sideways_cycle_program(eps), p, k, h).endpoint();
}

/// Fourth-order holonomy of the sideways cycle: the pose slides by
/// eps^4 R^2/l along (sin(heading), -cos(heading)); heading and shape are
/// unchanged.
template <typename Scalar>
Configuration<Scalar> predict_sideways(const Configuration<Scalar>& p,
                                       Scalar eps, const CarParams<Scalar>& k) {
  const Scalar amount = eps * eps * eps * eps * k.wheel_radius * k.wheel_radius / k.rod_length;
  Configuration<Scalar> out = p;
  out.pose.x += amount * std::sin(p.pose.heading);
  out.pose.y -= amount * std::cos(p.pose.heading);
  return out;
}

/// The ten-move program whose net effect is rolling of the pose with a
/// frozen wheel: the small conjugating moves are steers rather than drives.
template <typename Scalar>
DriverProgram<Scalar> slip_cycle_program(Scalar eps) {
  return detail::iterated_cycle_program(detail::Control::kSteer,
                                        detail::Control::kDrive,
                                        detail::Control::kSteer, eps, Scalar(1));
}

/// Executes the slip cycle: the wheel angle returns exactly while the pose
/// advances as if the car had rolled with a frozen wheel (backward by eps^4
/// of wheel-angle-equivalent).
template <typename Scalar>
Configuration<Scalar> slip_cycle(const Configuration<Scalar>& p, Scalar eps,
                                 const CarParams<Scalar>& k, Scalar step) {
  const Scalar h = detail::cycle_step(step, std::abs(eps));
  return integrate(slip_cycle_program(eps), p, k, h).endpoint();
}

/// Estimates the commutator of two lifted shape directions from the four-leg
/// flow cycle, as (end - start) / (-eps^2). First-order accurate in eps;
/// Richardson extrapolation of two estimates is second-order.
template <typename Scalar>
ConfigTangent<Scalar> commutator_defect(const Configuration<Scalar>& p,
                                        const ShapeTangent<Scalar>& flow_a,
                                        const ShapeTangent<Scalar>& flow_b,
                                        Scalar eps, const CarParams<Scalar>& k,
                                        Scalar step) {
  if (!(eps > Scalar(0))) {
    throw std::invalid_argument("commutator_defect: eps must be positive");
  }
  const Scalar h = detail::cycle_step(step, eps);
  DriverProgram<Scalar> prog;
  prog.rates(flow_b.d_wheel, flow_b.d_steer, eps)
      .rates(flow_a.d_wheel, flow_a.d_steer, eps)
      .rates(-flow_b.d_wheel, -flow_b.d_steer, eps)
      .rates(-flow_a.d_wheel, -flow_a.d_steer, eps);
  const Configuration<Scalar> end = integrate(prog, p, k, h).endpoint();
  const Scalar scale = Scalar(-1) / (eps * eps);
  ConfigTangent<Scalar> v;
  v.d_wheel = scale * (end.shape.wheel_angle - p.shape.wheel_angle);
  v.d_steer = scale * (end.shape.steering_angle - p.shape.steering_angle);
  v.d_x = scale * (end.pose.x - p.pose.x);
  v.d_y = scale * (end.pose.y - p.pose.y);
  v.d_heading = scale * (end.pose.heading - p.pose.heading);
  return v;
}

/// Plans a finite sideways displacement as a train of sideways cycles.
///
/// A positive `lateral` requests |lateral| against the initial perpendicular
/// (-sin(heading0), cos(heading0)); a negative one mirrors every steer move
/// and translates the other way. Throws std::invalid_argument for eps
/// outside (0, 0.3] and CycleCapError when more than `cycle_cap` cycles
/// would be needed.
template <typename Scalar>
DriverProgram<Scalar> plan_parallel_park(const Configuration<Scalar>& p,
                                         Scalar lateral, Scalar eps,
                                         const CarParams<Scalar>& k,
                                         std::size_t cycle_cap = 100000) {
  (void)p;  // the cycle train is pose-independent; kept for interface symmetry
  if (!(eps > Scalar(0)) || eps > Scalar(0.3)) {
    throw std::invalid_argument("plan_parallel_park: eps must lie in (0, 0.3]");
  }
  if (!std::isfinite(lateral)) {
    throw std::invalid_argument("plan_parallel_park: lateral must be finite");
  }
  DriverProgram<Scalar> prog;
  if (lateral == Scalar(0)) return prog;

  const Scalar per_cycle = eps * eps * eps * eps * k.wheel_radius * k.wheel_radius / k.rod_length;
  const Scalar n_real = std::ceil(std::abs(lateral) / per_cycle);
  if (n_real > static_cast<Scalar>(cycle_cap)) {
    throw CycleCapError(static_cast<std::size_t>(n_real), cycle_cap);
  }
  const auto n = static_cast<std::size_t>(n_real);
  const DriverProgram<Scalar> cycle = sideways_cycle_program(eps, lateral < Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    prog.append(cycle);
  }
  return prog;
}

/// Number of cycles plan_parallel_park would emit for this request.
template <typename Scalar>
std::size_t parking_cycle_count(Scalar lateral, Scalar eps,
                                const CarParams<Scalar>& k) {
  if (lateral == Scalar(0)) return 0;
  const Scalar per_cycle = eps * eps * eps * eps * k.wheel_radius * k.wheel_radius / k.rod_length;
  return static_cast<std::size_t>(std::ceil(std::abs(lateral) / per_cycle));
}

/// Runs one cycle and scores it against its prediction.
template <typename Scalar>
CycleReport<Scalar> report_simple_cycle(const Configuration<Scalar>& p,
                                        Scalar eps, const CarParams<Scalar>& k,
                                        Scalar step) {
  CycleReport<Scalar> rep;
  rep.start = p;
  rep.end = simple_cycle(p, eps, k, step);
  rep.predicted_end = predict_simple_cycle(p, eps, k);
  rep.epsilon = eps;
  rep.residual = pose_distance(rep.end.pose, rep.predicted_end.pose);
  return rep;
}

template <typename Scalar>
CycleReport<Scalar> report_sideways_cycle(const Configuration<Scalar>& p,
                                          Scalar eps,
                                          const CarParams<Scalar>& k,
                                          Scalar step) {
  CycleReport<Scalar> rep;
  rep.start = p;
  rep.end = sideways_cycle(p, eps, k, step);
  rep.predicted_end = predict_sideways(p, eps, k);
  rep.epsilon = eps;
  rep.residual = pose_distance(rep.end.pose, rep.predicted_end.pose);
  return rep;
}

}  // namespace carkin

#endif  // CARKIN_MANEUVERS_HPP_
