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

#ifndef CARKIN_HEADING_FIELD_HPP_
#define CARKIN_HEADING_FIELD_HPP_

#include <cmath>

#include <Eigen/Dense>

#include "carkin/bundle.hpp"
#include "carkin/group_e2.hpp"

namespace carkin {

template <typename Scalar>
using HeadingVector = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using RepMatrix = Eigen::Matrix<Scalar, 2, 2>;

/// Unit vector along the rod, as a function of the configuration.
template <typename Scalar>
HeadingVector<Scalar> heading_direction(const Configuration<Scalar>& p) {
  return HeadingVector<Scalar>(std::cos(p.pose.heading), std::sin(p.pose.heading));
}

/// How rigid motions act on heading vectors. Depends on the rotation angle
/// only.
template <typename Scalar>
RepMatrix<Scalar> heading_rep(const GroupElement<Scalar>& g) {
  const Scalar c = std::cos(g.angle);
  const Scalar s = std::sin(g.angle);
  RepMatrix<Scalar> m;
  m << c, s, -s, c;
  return m;
}

/// Max-norm violation of the transformation law
///   heading(g . p) = heading_rep(inverse(g)) * heading(p).
/// Vanishes to roundoff for every (g, p).
template <typename Scalar>
Scalar equivariance_defect(const GroupElement<Scalar>& g,
                           const Configuration<Scalar>& p) {
  const HeadingVector<Scalar> moved = heading_direction(act_on_configuration(g, p));
  const HeadingVector<Scalar> predicted = heading_rep(inverse(g)) * heading_direction(p);
  return (moved - predicted).template lpNorm<Eigen::Infinity>();
}

/// Net rotation of the heading vector caused by a wheel advance at frozen
/// steering.
template <typename Scalar>
Scalar heading_rotation_angle(Scalar wheel_delta, Scalar steering_angle,
                              const CarParams<Scalar>& k) {
  return wheel_delta * (k.wheel_radius / k.rod_length) * std::sin(steering_angle);
}

/// First-order change of the heading vector in the driver's frame after a
/// wheel advance from the reference placement of `m`: the heading picks up a
/// component along the second frame axis only.
template <typename Scalar>
HeadingVector<Scalar> covariant_change(const Shape<Scalar>& m, Scalar wheel_delta,
                                       const CarParams<Scalar>& k) {
  return HeadingVector<Scalar>(
      Scalar(0), heading_rotation_angle(wheel_delta, m.steering_angle, k));
}

}  // namespace carkin

#endif  // CARKIN_HEADING_FIELD_HPP_
