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

#ifndef CARKIN_GROUP_E2_HPP_
#define CARKIN_GROUP_E2_HPP_

#include <cmath>

#include <Eigen/Dense>

#include "carkin/numerics.hpp"

namespace carkin {

template <typename Scalar>
using PlanePoint = Eigen::Matrix<Scalar, 1, 2>;  // row vector

template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

/// A rigid motion of the plane: rotation by `angle` about the origin followed
/// by a translation. Acts on row vectors from the right, p -> p * R + t, so
/// compose(a, b) means "a first, then b".
///
/// The homogeneous form keeps the rotation block in the upper-left 2x2 and
/// the translation in the bottom row, with (0, 0, 1)^T as the last column.
template <typename Scalar = double>
struct GroupElement {
  Scalar angle{0};
  PlanePoint<Scalar> translation{PlanePoint<Scalar>::Zero()};

  static GroupElement Identity() { return {}; }

  /// 2x2 rotation block for the row-vector action.
  Mat2<Scalar> rotation() const {
    const Scalar c = std::cos(angle);
    const Scalar s = std::sin(angle);
    Mat2<Scalar> r;
    r << c, s, -s, c;
    return r;
  }

  /// Homogeneous 3x3 representative.
  Mat3<Scalar> matrix() const {
    Mat3<Scalar> m = Mat3<Scalar>::Identity();
    m.template topLeftCorner<2, 2>() = rotation();
    m.template block<1, 2>(2, 0) = translation;
    return m;
  }

  /// Recovers (angle, translation) from a homogeneous representative. The
  /// angle lands in (-pi, pi].
  static GroupElement FromMatrix(const Mat3<Scalar>& m) {
    GroupElement g;
    g.angle = std::atan2(m(0, 1), m(0, 0));
    g.translation = m.template block<1, 2>(2, 0);
    return g;
  }
};

/// An infinitesimal rigid motion: `spin` is the angular rate, `drift` the
/// two translation rates. The matrix form has an antisymmetric upper-left
/// block, the drift in the bottom row and a zero last column.
template <typename Scalar = double>
struct AlgebraElement {
  Scalar spin{0};
  PlanePoint<Scalar> drift{PlanePoint<Scalar>::Zero()};

  static AlgebraElement Zero() { return {}; }
  static AlgebraElement Rotation() {
    AlgebraElement c;
    c.spin = Scalar(1);
    return c;
  }
  static AlgebraElement TranslationX() {
    AlgebraElement c;
    c.drift(0) = Scalar(1);
    return c;
  }
  static AlgebraElement TranslationY() {
    AlgebraElement c;
    c.drift(1) = Scalar(1);
    return c;
  }

  Mat3<Scalar> matrix() const {
    Mat3<Scalar> m = Mat3<Scalar>::Zero();
    m(0, 1) = spin;
    m(1, 0) = -spin;
    m.template block<1, 2>(2, 0) = drift;
    return m;
  }

  static AlgebraElement FromMatrix(const Mat3<Scalar>& m) {
    AlgebraElement c;
    c.spin = m(0, 1);
    c.drift = m.template block<1, 2>(2, 0);
    return c;
  }

  AlgebraElement operator+(const AlgebraElement& o) const {
    return {spin + o.spin, drift + o.drift};
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    return {spin - o.spin, drift - o.drift};
  }
  AlgebraElement operator-() const { return {-spin, -drift}; }
  friend AlgebraElement operator*(Scalar a, const AlgebraElement& c) {
    return {a * c.spin, a * c.drift};
  }

  Scalar max_abs() const { return std::max(std::abs(spin), drift.template lpNorm<Eigen::Infinity>()); }
};

using GroupElementd = GroupElement<double>;
using AlgebraElementd = AlgebraElement<double>;

/// Moves a plane point by the rigid motion (rotation first, then translation).
template <typename Scalar>
PlanePoint<Scalar> act_on_point(const GroupElement<Scalar>& g,
                                const PlanePoint<Scalar>& p) {
  return p * g.rotation() + g.translation;
}

/// Product of rigid motions; acting by the result equals acting by `a`, then
/// by `b`. The angle is renormalized through atan2 of the product block.
template <typename Scalar>
GroupElement<Scalar> compose(const GroupElement<Scalar>& a,
                             const GroupElement<Scalar>& b) {
  const Mat2<Scalar> block = a.rotation() * b.rotation();
  GroupElement<Scalar> out;
  out.angle = std::atan2(block(0, 1), block(0, 0));
  out.translation = a.translation * b.rotation() + b.translation;
  return out;
}

template <typename Scalar>
GroupElement<Scalar> inverse(const GroupElement<Scalar>& g) {
  GroupElement<Scalar> out;
  out.angle = -g.angle;
  out.translation = -(g.translation * g.rotation().transpose());
  return out;
}

/// One-parameter subgroup: the rigid motion reached after time t when moving
/// with the constant rates in `c`. For small |t * spin| a short series
/// replaces the sin/cos quotients.
template <typename Scalar>
GroupElement<Scalar> exp(const AlgebraElement<Scalar>& c, Scalar t) {
  const Scalar turn = t * c.spin;
  Scalar a, b;
  if (std::abs(turn) < Scalar(1e-8)) {
    const Scalar u = turn * turn;
    a = 1 - u / 6 + u * u / 120 - u * u * u / 5040;
    b = turn / 2 - turn * u / 24 + turn * u * u / 720 - turn * u * u * u / 40320;
  } else {
    a = std::sin(turn) / turn;
    b = (1 - std::cos(turn)) / turn;
  }
  GroupElement<Scalar> g;
  g.angle = turn;
  g.translation(0) = t * (c.drift(0) * a - c.drift(1) * b);
  g.translation(1) = t * (c.drift(0) * b + c.drift(1) * a);
  return g;
}

/// Lie bracket. Only the mixed rotation/translation products survive, so the
/// spin of the result is always zero.
template <typename Scalar>
AlgebraElement<Scalar> bracket(const AlgebraElement<Scalar>& a,
                               const AlgebraElement<Scalar>& b) {
  AlgebraElement<Scalar> out;
  out.spin = Scalar(0);
  out.drift(0) = a.spin * b.drift(1) - b.spin * a.drift(1);
  out.drift(1) = a.drift(0) * b.spin - b.drift(0) * a.spin;
  return out;
}

/// Equality up to tolerance; angles are compared on the circle.
template <typename Scalar>
bool is_approx(const GroupElement<Scalar>& a, const GroupElement<Scalar>& b,
               Scalar tol = Scalar(1e-9)) {
  return angle_distance(a.angle, b.angle) <= tol &&
         (a.translation - b.translation).template lpNorm<Eigen::Infinity>() <= tol;
}

}  // namespace carkin

#endif  // CARKIN_GROUP_E2_HPP_
