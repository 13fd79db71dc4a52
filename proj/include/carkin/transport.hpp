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

#ifndef CARKIN_TRANSPORT_HPP_
#define CARKIN_TRANSPORT_HPP_

#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "carkin/bundle.hpp"
#include "carkin/connection.hpp"

namespace carkin {

/// Advance the wheel angle by `delta` at unit rate, steering untouched.
template <typename Scalar = double>
struct Drive {
  Scalar delta{0};
};

/// Advance the steering angle by `delta` at unit rate, wheel untouched.
template <typename Scalar = double>
struct Steer {
  Scalar delta{0};
};

/// Hold both rates constant for `duration` seconds.
template <typename Scalar = double>
struct Rates {
  Scalar wheel_rate{0};
  Scalar steer_rate{0};
  Scalar duration{0};
};

template <typename Scalar = double>
using Segment = std::variant<Drive<Scalar>, Steer<Scalar>, Rates<Scalar>>;

/// A time-ordered sequence of control segments; the shape-space curve the
/// driver commands.
template <typename Scalar = double>
struct DriverProgram {
  std::vector<Segment<Scalar>> segments;

  DriverProgram& drive(Scalar delta) {
    segments.push_back(Drive<Scalar>{delta});
    return *this;
  }
  DriverProgram& steer(Scalar delta) {
    segments.push_back(Steer<Scalar>{delta});
    return *this;
  }
  DriverProgram& rates(Scalar wheel_rate, Scalar steer_rate, Scalar duration) {
    segments.push_back(Rates<Scalar>{wheel_rate, steer_rate, duration});
    return *this;
  }
  DriverProgram& append(const DriverProgram& other) {
    segments.insert(segments.end(), other.segments.begin(), other.segments.end());
    return *this;
  }

  /// Net (wheel, steer) advance over the whole program.
  ShapeTangent<Scalar> total_shape_change() const {
    ShapeTangent<Scalar> total;
    for (const Segment<Scalar>& seg : segments) {
      const Rates<Scalar> r = as_rates(seg);
      total.d_wheel += r.wheel_rate * r.duration;
      total.d_steer += r.steer_rate * r.duration;
    }
    return total;
  }

  /// Canonical rate form of a segment: Drive/Steer run at unit rate for
  /// |delta| seconds with the sign moved into the rate.
  static Rates<Scalar> as_rates(const Segment<Scalar>& seg) {
    if (const auto* d = std::get_if<Drive<Scalar>>(&seg)) {
      const Scalar s = d->delta > 0 ? Scalar(1) : (d->delta < 0 ? Scalar(-1) : Scalar(0));
      return {s, Scalar(0), std::abs(d->delta)};
    }
    if (const auto* st = std::get_if<Steer<Scalar>>(&seg)) {
      const Scalar s = st->delta > 0 ? Scalar(1) : (st->delta < 0 ? Scalar(-1) : Scalar(0));
      return {Scalar(0), s, std::abs(st->delta)};
    }
    return std::get<Rates<Scalar>>(seg);
  }
};

template <typename Scalar = double>
struct TrajectorySample {
  Scalar t{0};
  Configuration<Scalar> config;
};

/// Time-sampled result of integrating a program; the first sample is the
/// initial configuration and times are strictly increasing.
template <typename Scalar = double>
struct Trajectory {
  std::vector<TrajectorySample<Scalar>> samples;

  const Configuration<Scalar>& endpoint() const { return samples.back().config; }
  Scalar duration() const { return samples.back().t; }
};

using DriverProgramd = DriverProgram<double>;
using Trajectoryd = Trajectory<double>;

/// Configuration velocity of the rolling car at the given control rates;
/// identical to the horizontal lift of (wheel_rate, steer_rate).
template <typename Scalar>
ConfigTangent<Scalar> transport_derivative(const Configuration<Scalar>& p,
                                           Scalar wheel_rate, Scalar steer_rate,
                                           const CarParams<Scalar>& k) {
  return horizontal_lift(p, ShapeTangent<Scalar>{wheel_rate, steer_rate}, k);
}

namespace detail {

template <typename Scalar>
void require_finite_program(const DriverProgram<Scalar>& program) {
  for (const Segment<Scalar>& seg : program.segments) {
    const Rates<Scalar> r = DriverProgram<Scalar>::as_rates(seg);
    if (!std::isfinite(r.wheel_rate) || !std::isfinite(r.steer_rate) ||
        !std::isfinite(r.duration) || r.duration < Scalar(0)) {
      throw std::invalid_argument("integrate: program has non-finite or negative-duration segment");
    }
  }
}

}  // namespace detail

/// Integrates the rolling constraints along a program with the classical
/// 4th-order one-step scheme at fixed `step` (the last step of each segment
/// is shortened so segment boundaries land on nodes). Shape coordinates are
/// advanced exactly; only the pose is integrated numerically.
template <typename Scalar>
Trajectory<Scalar> integrate(const DriverProgram<Scalar>& program,
                             const Configuration<Scalar>& p0,
                             const CarParams<Scalar>& k, Scalar step) {
  if (!(step > Scalar(0)) || !std::isfinite(step)) {
    throw std::invalid_argument("integrate: step must be positive");
  }
  detail::require_finite_program(program);

  const Scalar R = k.wheel_radius;
  const Scalar l = k.rod_length;

  Trajectory<Scalar> traj;
  traj.samples.push_back({Scalar(0), p0});

  Scalar t0 = 0;
  Configuration<Scalar> p = p0;
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

  for (const Segment<Scalar>& seg : program.segments) {
    const Rates<Scalar> r = DriverProgram<Scalar>::as_rates(seg);
    const Scalar T = r.duration;
    if (T == Scalar(0)) continue;

    const Scalar a0 = p.shape.wheel_angle;
    const Scalar b0 = p.shape.steering_angle;
    Vec3 u(p.pose.x, p.pose.y, p.pose.heading);

    const auto f = [&](Scalar tau, const Vec3& state) {
      const Scalar b = b0 + r.steer_rate * tau;
      return Vec3(r.wheel_rate * R * std::cos(b + state(2)),
                  r.wheel_rate * R * std::sin(b + state(2)),
                  r.wheel_rate * (R / l) * std::sin(b));
    };

    Scalar tau = 0;
    std::size_t i = 0;
    while (tau < T) {
      const Scalar next = std::min(T, static_cast<Scalar>(i + 1) * step);
      const Scalar h = next - tau;
      const Vec3 k1 = f(tau, u);
      const Vec3 k2 = f(tau + h / 2, u + (h / 2) * k1);
      const Vec3 k3 = f(tau + h / 2, u + (h / 2) * k2);
      const Vec3 k4 = f(tau + h, u + h * k3);
      u += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
      tau = next;
      ++i;
      p.shape.wheel_angle = a0 + r.wheel_rate * tau;
      p.shape.steering_angle = b0 + r.steer_rate * tau;
      p.pose = Pose<Scalar>{u(0), u(1), u(2)};
      traj.samples.push_back({t0 + tau, p});
    }
    t0 += T;
  }
  return traj;
}

/// Endpoint of a drive at frozen steering angle, in closed form. The path is
/// a circle of radius rod_length / sin(beta0) about
///   (x0 - r sin(heading0 + beta0), y0 + r cos(heading0 + beta0)),
/// degenerating to a straight line along the rod when sin(beta0) vanishes.
/// `wheel_delta` is the (signed) wheel-angle advance.
template <typename Scalar>
Pose<Scalar> fixed_steer_closed_form(Scalar beta0, Scalar wheel_delta,
                                     const Pose<Scalar>& start,
                                     const CarParams<Scalar>& k) {
  const Scalar R = k.wheel_radius;
  const Scalar l = k.rod_length;
  const Scalar s = std::sin(beta0);
  if (std::abs(s) < Scalar(1e-9)) {
    return {start.x + wheel_delta * R * std::cos(start.heading),
            start.y + wheel_delta * R * std::sin(start.heading), start.heading};
  }
  const Scalar rc = l / s;
  const Scalar heading = start.heading + wheel_delta * (R / l) * s;
  return {start.x + rc * (std::sin(heading + beta0) - std::sin(start.heading + beta0)),
          start.y - rc * (std::cos(heading + beta0) - std::cos(start.heading + beta0)),
          heading};
}

}  // namespace carkin

#endif  // CARKIN_TRANSPORT_HPP_
