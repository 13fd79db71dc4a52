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

#ifndef CARKIN_BUNDLE_HPP_
#define CARKIN_BUNDLE_HPP_

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "carkin/group_e2.hpp"
#include "carkin/numerics.hpp"

namespace carkin {

/// Geometry of the vehicle: front-wheel radius and length of the rod joining
/// the axles. Both must be positive.
template <typename Scalar = double>
struct CarParams {
  Scalar wheel_radius;
  Scalar rod_length;

  CarParams(Scalar wheel_radius_in, Scalar rod_length_in)
      : wheel_radius(wheel_radius_in), rod_length(rod_length_in) {
    if (!(wheel_radius > Scalar(0)) || !(rod_length > Scalar(0))) {
      throw std::invalid_argument("CarParams: wheel radius and rod length must be positive");
    }
  }
};

/// Internal degrees of freedom: accumulated front-wheel rotation and the
/// steering angle between front axle and rod. Neither is range-limited.
template <typename Scalar = double>
struct Shape {
  Scalar wheel_angle{0};
  Scalar steering_angle{0};
};

/// Placement of the rod in the plane: front-axle center and heading. The
/// heading accumulates without wrapping; comparisons reduce it to (-pi, pi].
template <typename Scalar = double>
struct Pose {
  Scalar x{0};
  Scalar y{0};
  Scalar heading{0};
};

/// Full state of the car.
template <typename Scalar = double>
struct Configuration {
  Shape<Scalar> shape;
  Pose<Scalar> pose;
};

/// Velocity of a shape-space curve.
template <typename Scalar = double>
struct ShapeTangent {
  Scalar d_wheel{0};
  Scalar d_steer{0};
};

/// Velocity of a configuration-space curve, in coordinate order
/// (wheel, steer, x, y, heading).
template <typename Scalar = double>
struct ConfigTangent {
  Scalar d_wheel{0};
  Scalar d_steer{0};
  Scalar d_x{0};
  Scalar d_y{0};
  Scalar d_heading{0};

  using Vector5 = Eigen::Matrix<Scalar, 5, 1>;

  Vector5 vector() const {
    Vector5 v;
    v << d_wheel, d_steer, d_x, d_y, d_heading;
    return v;
  }

  static ConfigTangent FromVector(const Vector5& v) {
    return {v(0), v(1), v(2), v(3), v(4)};
  }

  ConfigTangent operator+(const ConfigTangent& o) const {
    return {d_wheel + o.d_wheel, d_steer + o.d_steer, d_x + o.d_x,
            d_y + o.d_y, d_heading + o.d_heading};
  }
  ConfigTangent operator-(const ConfigTangent& o) const {
    return {d_wheel - o.d_wheel, d_steer - o.d_steer, d_x - o.d_x,
            d_y - o.d_y, d_heading - o.d_heading};
  }
  friend ConfigTangent operator*(Scalar a, const ConfigTangent& v) {
    return {a * v.d_wheel, a * v.d_steer, a * v.d_x, a * v.d_y,
            a * v.d_heading};
  }

  Scalar max_abs() const { return vector().template lpNorm<Eigen::Infinity>(); }
};

using CarParamsd = CarParams<double>;
using Shaped = Shape<double>;
using Posed = Pose<double>;
using Configurationd = Configuration<double>;
using ShapeTangentd = ShapeTangent<double>;
using ConfigTangentd = ConfigTangent<double>;

/// Forgets the placement of the rod.
template <typename Scalar>
Shape<Scalar> project(const Configuration<Scalar>& p) {
  return p.shape;
}

/// Reference placement of a shape: rod on the x1-axis, heading forward.
template <typename Scalar>
Configuration<Scalar> section(const Shape<Scalar>& m) {
  return {m, Pose<Scalar>{}};
}

/// Rigid motion of a rod placement; the heading turns with the rotation.
template <typename Scalar>
Pose<Scalar> act_on_pose(const GroupElement<Scalar>& g, const Pose<Scalar>& e) {
  const PlanePoint<Scalar> moved = act_on_point<Scalar>(g, PlanePoint<Scalar>(e.x, e.y));
  return {moved(0), moved(1), e.heading + g.angle};
}

/// Rigid motion of a configuration; the shape is untouched.
template <typename Scalar>
Configuration<Scalar> act_on_configuration(const GroupElement<Scalar>& g,
                                           const Configuration<Scalar>& p) {
  return {p.shape, act_on_pose(g, p.pose)};
}

/// The unique rigid motion carrying the reference placement (0, 0, 0) to `e`.
template <typename Scalar>
GroupElement<Scalar> pose_to_group(const Pose<Scalar>& e) {
  GroupElement<Scalar> g;
  g.angle = e.heading;
  g.translation = PlanePoint<Scalar>(e.x, e.y);
  return g;
}

/// Velocity of `p` under the one-parameter family of rigid motions generated
/// by `c`. Such fields never move the shape coordinates.
template <typename Scalar>
ConfigTangent<Scalar> fundamental_field(const AlgebraElement<Scalar>& c,
                                        const Configuration<Scalar>& p) {
  ConfigTangent<Scalar> v;
  v.d_x = c.spin * (-p.pose.y) + c.drift(0);
  v.d_y = c.spin * p.pose.x + c.drift(1);
  v.d_heading = c.spin;
  return v;
}

/// Configuration displaced by h * v in coordinates. Used by the
/// finite-difference routes.
template <typename Scalar>
Configuration<Scalar> displaced(const Configuration<Scalar>& p,
                                const ConfigTangent<Scalar>& v, Scalar h) {
  Configuration<Scalar> q = p;
  q.shape.wheel_angle += h * v.d_wheel;
  q.shape.steering_angle += h * v.d_steer;
  q.pose.x += h * v.d_x;
  q.pose.y += h * v.d_y;
  q.pose.heading += h * v.d_heading;
  return q;
}

/// Max-norm distance between poses; headings are compared on the circle.
template <typename Scalar>
Scalar pose_distance(const Pose<Scalar>& a, const Pose<Scalar>& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y),
                   angle_distance(a.heading, b.heading)});
}

template <typename Scalar>
Scalar shape_distance(const Shape<Scalar>& a, const Shape<Scalar>& b) {
  return std::max(std::abs(a.wheel_angle - b.wheel_angle),
                  std::abs(a.steering_angle - b.steering_angle));
}

template <typename Scalar>
Scalar config_distance(const Configuration<Scalar>& a,
                       const Configuration<Scalar>& b) {
  return std::max(shape_distance(a.shape, b.shape), pose_distance(a.pose, b.pose));
}

}  // namespace carkin

#endif  // CARKIN_BUNDLE_HPP_
