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

#ifndef CARKIN_CONNECTION_HPP_
#define CARKIN_CONNECTION_HPP_

#include <cmath>

#include <Eigen/Dense>

#include "carkin/bundle.hpp"
#include "carkin/group_e2.hpp"

namespace carkin {

// The rolling constraints as an algebra-valued 1-form: a velocity is
// admissible ("horizontal") iff all three components vanish on it.
template <typename Scalar>
using ConnectionValue = AlgebraElement<Scalar>;

template <typename Scalar>
using CurvatureValue = AlgebraElement<Scalar>;

/// Evaluates the constraint form on a configuration velocity.
///
/// The spin component measures heading change not accounted for by rolling;
/// the drift components measure slip of the front-axle contact point.
template <typename Scalar>
ConnectionValue<Scalar> connection_form(const Configuration<Scalar>& p,
                                        const ConfigTangent<Scalar>& v,
                                        const CarParams<Scalar>& k) {
  const Scalar R = k.wheel_radius;
  const Scalar l = k.rod_length;
  const Scalar b = p.shape.steering_angle;
  const Scalar phi = p.pose.heading;
  ConnectionValue<Scalar> w;
  w.spin = v.d_heading - (R / l) * std::sin(b) * v.d_wheel;
  w.drift(0) = v.d_x + p.pose.y * w.spin - R * std::cos(b + phi) * v.d_wheel;
  w.drift(1) = v.d_y - p.pose.x * w.spin - R * std::sin(b + phi) * v.d_wheel;
  return w;
}

/// The constraint form pulled back to shape space through the reference
/// placement. It is proportional to the wheel rate alone; steering in place
/// is unconstrained.
template <typename Scalar>
ConnectionValue<Scalar> gauge_potential(const Shape<Scalar>& m,
                                        const ShapeTangent<Scalar>& w,
                                        const CarParams<Scalar>& k) {
  const Scalar R = k.wheel_radius;
  const Scalar b = m.steering_angle;
  ConnectionValue<Scalar> a;
  a.spin = -(R / k.rod_length) * std::sin(b) * w.d_wheel;
  a.drift(0) = -R * std::cos(b) * w.d_wheel;
  a.drift(1) = -R * std::sin(b) * w.d_wheel;
  return a;
}

/// Second route to connection_form: conjugate the shape-space potential by
/// the homogeneous representative of the pose and add its Maurer-Cartan term,
/// all at the 3x3 matrix level. Agrees with connection_form to roundoff.
template <typename Scalar>
ConnectionValue<Scalar> connection_via_gauge_transform(
    const Configuration<Scalar>& p, const ConfigTangent<Scalar>& v,
    const CarParams<Scalar>& k) {
  const GroupElement<Scalar> g = pose_to_group(p.pose);
  const Mat3<Scalar> b = g.matrix();
  const Mat3<Scalar> b_inv = inverse(g).matrix();

  const ShapeTangent<Scalar> w{v.d_wheel, v.d_steer};
  const Mat3<Scalar> potential = gauge_potential(project(p), w, k).matrix();

  // d of the representative along v: the rotation block turns with the
  // heading, the bottom row moves with (x, y).
  const Scalar c = std::cos(p.pose.heading);
  const Scalar s = std::sin(p.pose.heading);
  Mat3<Scalar> db = Mat3<Scalar>::Zero();
  db(0, 0) = -s * v.d_heading;
  db(0, 1) = c * v.d_heading;
  db(1, 0) = -c * v.d_heading;
  db(1, 1) = -s * v.d_heading;
  db(2, 0) = v.d_x;
  db(2, 1) = v.d_y;

  const Mat3<Scalar> total = b_inv * potential * b + b_inv * db;
  return ConnectionValue<Scalar>::FromMatrix(total);
}

/// The unique constraint-respecting configuration velocity over a given
/// shape velocity.
template <typename Scalar>
ConfigTangent<Scalar> horizontal_lift(const Configuration<Scalar>& p,
                                      const ShapeTangent<Scalar>& w,
                                      const CarParams<Scalar>& k) {
  const Scalar R = k.wheel_radius;
  const Scalar b = p.shape.steering_angle;
  const Scalar phi = p.pose.heading;
  ConfigTangent<Scalar> v;
  v.d_wheel = w.d_wheel;
  v.d_steer = w.d_steer;
  v.d_x = w.d_wheel * R * std::cos(b + phi);
  v.d_y = w.d_wheel * R * std::sin(b + phi);
  v.d_heading = w.d_wheel * (R / k.rod_length) * std::sin(b);
  return v;
}

/// Curvature 2-form on a pair of velocities. Only the wheel/steer plane
/// carries curvature, so the value is the analytic coefficient times the
/// oriented (wheel, steer) area of the pair.
template <typename Scalar>
CurvatureValue<Scalar> curvature(const Configuration<Scalar>& p,
                                 const ConfigTangent<Scalar>& v1,
                                 const ConfigTangent<Scalar>& v2,
                                 const CarParams<Scalar>& k) {
  const Scalar R = k.wheel_radius;
  const Scalar l = k.rod_length;
  const Scalar b = p.shape.steering_angle;
  const Scalar phi = p.pose.heading;
  const Scalar area = v1.d_wheel * v2.d_steer - v1.d_steer * v2.d_wheel;
  CurvatureValue<Scalar> out;
  out.spin = (R / l) * std::cos(b) * area;
  out.drift(0) = (-R * std::sin(b + phi) + (R / l) * p.pose.y * std::cos(b)) * area;
  out.drift(1) = (R * std::cos(b + phi) - (R / l) * p.pose.x * std::cos(b)) * area;
  return out;
}

/// Independent route to the curvature: exterior derivative of the connection
/// by central differences on coordinate-constant extensions of v1, v2, plus
/// the algebra commutator of the two connection values.
template <typename Scalar>
CurvatureValue<Scalar> curvature_via_structure_equation(
    const Configuration<Scalar>& p, const ConfigTangent<Scalar>& v1,
    const ConfigTangent<Scalar>& v2, const CarParams<Scalar>& k,
    Scalar h = Scalar(1e-5)) {
  const auto d_along = [&](const ConfigTangent<Scalar>& dir,
                           const ConfigTangent<Scalar>& arg) {
    const ConnectionValue<Scalar> plus =
        connection_form(displaced(p, dir, h), arg, k);
    const ConnectionValue<Scalar> minus =
        connection_form(displaced(p, dir, -h), arg, k);
    return (Scalar(1) / (2 * h)) * (plus - minus);
  };
  const CurvatureValue<Scalar> d_omega = d_along(v1, v2) - d_along(v2, v1);
  const CurvatureValue<Scalar> wedge =
      bracket(connection_form(p, v1, k), connection_form(p, v2, k));
  return d_omega + wedge;
}

/// Curvature pulled back to shape space through the reference placement,
/// per unit oriented (wheel, steer) area.
template <typename Scalar>
CurvatureValue<Scalar> field_strength(const Shape<Scalar>& m,
                                      const CarParams<Scalar>& k) {
  ConfigTangent<Scalar> d_wheel_dir;
  d_wheel_dir.d_wheel = Scalar(1);
  ConfigTangent<Scalar> d_steer_dir;
  d_steer_dir.d_steer = Scalar(1);
  return curvature(section(m), d_wheel_dir, d_steer_dir, k);
}

}  // namespace carkin

#endif  // CARKIN_CONNECTION_HPP_
