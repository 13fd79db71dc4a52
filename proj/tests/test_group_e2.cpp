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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "carkin/group_e2.hpp"
#include "oracles.hpp"

using namespace carkin;
namespace ct = carkin::testing;

namespace {
constexpr double kPi = std::numbers::pi;

GroupElement<double> make(double angle, double b1, double b2) {
  GroupElement<double> g;
  g.angle = angle;
  g.translation = PlanePoint<double>(b1, b2);
  return g;
}
}  // namespace

TEST_CASE("act_on_point moves plane points by rotation then translation") {
  const PlanePoint<double> p(5.0, -2.0);
  CHECK((act_on_point(GroupElement<double>::Identity(), p) - p).norm() == 0.0);

  const PlanePoint<double> q = act_on_point(make(kPi / 2, 0, 0), PlanePoint<double>(1, 0));
  CHECK(std::abs(q(0) - 0.0) <= 1e-12);
  CHECK(std::abs(q(1) - 1.0) <= 1e-12);

  const PlanePoint<double> r = act_on_point(make(kPi / 2, 3, 4), PlanePoint<double>(1, 0));
  CHECK(std::abs(r(0) - 3.0) <= 1e-12);
  CHECK(std::abs(r(1) - 5.0) <= 1e-12);
}

TEST_CASE("act_on_point agrees with the homogeneous row-vector product") {
  ct::Rng rng(91);
  for (int i = 0; i < 100; ++i) {
    const GroupElement<double> g = ct::random_group(rng);
    const PlanePoint<double> p(ct::uniform(rng, -3, 3), ct::uniform(rng, -3, 3));
    Eigen::Matrix<double, 1, 3> eta;
    eta << p(0), p(1), 1.0;
    const Eigen::Matrix<double, 1, 3> moved = eta * g.matrix();
    const PlanePoint<double> direct = act_on_point(g, p);
    CHECK(std::abs(moved(0) - direct(0)) <= 1e-12);
    CHECK(std::abs(moved(1) - direct(1)) <= 1e-12);
    CHECK(moved(2) == 1.0);
  }
}

TEST_CASE("compose matches the 3x3 matrix product") {
  const GroupElement<double> g = make(0.7, -1.0, 2.0);
  CHECK(is_approx(compose(GroupElement<double>::Identity(), g), g, 1e-15));

  const GroupElement<double> sum = compose(make(0, 1, 2), make(0, 3, 4));
  CHECK(sum.angle == 0.0);
  CHECK(sum.translation(0) == 4.0);
  CHECK(sum.translation(1) == 6.0);

  const GroupElement<double> thirds = compose(make(kPi / 3, 0, 0), make(kPi / 6, 0, 0));
  CHECK(std::abs(thirds.angle - kPi / 2) <= 1e-12);

  ct::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const GroupElement<double> a = ct::random_group(rng);
    const GroupElement<double> b = ct::random_group(rng);
    const Mat3<double> product = a.matrix() * b.matrix();
    CHECK((compose(a, b).matrix() - product).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("inverse undoes the motion") {
  CHECK(is_approx(inverse(GroupElement<double>::Identity()),
                  GroupElement<double>::Identity(), 1e-15));
  CHECK(std::abs(inverse(make(0.9, 0, 0)).angle + 0.9) <= 1e-15);

  const GroupElement<double> g = make(kPi / 2, 3, 4);
  CHECK(is_approx(compose(g, inverse(g)), GroupElement<double>::Identity(), 1e-12));

  const Mat3<double> matrix_inverse = g.matrix().inverse();
  CHECK((inverse(g).matrix() - matrix_inverse).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("matrix form is orthonormal and round-trips") {
  ct::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const GroupElement<double> g = ct::random_group(rng);
    const Mat2<double> block = g.matrix().topLeftCorner<2, 2>();
    CHECK((block.transpose() * block - Mat2<double>::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(block.determinant() - 1.0) <= 1e-12);

    const GroupElement<double> back = GroupElement<double>::FromMatrix(g.matrix());
    CHECK(angle_distance(back.angle, g.angle) <= 1e-12);
    CHECK((back.translation - g.translation).lpNorm<Eigen::Infinity>() == 0.0);
  }
}

TEST_CASE("exp of the translation generators is a straight march") {
  const GroupElement<double> g = carkin::exp(AlgebraElement<double>::TranslationX(), 1.7);
  CHECK(g.angle == 0.0);
  CHECK(g.translation(0) == 1.7);
  CHECK(g.translation(1) == 0.0);
}

TEST_CASE("exp matches the power-series oracle") {
  SUBCASE("pure rotation") {
    for (const double t : {-2.0, -0.5, 0.3, 1.9}) {
      const GroupElement<double> closed = carkin::exp(AlgebraElement<double>::Rotation(), t);
      const GroupElement<double> series =
          ct::exp_series_oracle(AlgebraElement<double>::Rotation(), t);
      CHECK(angle_distance(closed.angle, series.angle) <= 1e-12);
      CHECK((closed.translation - series.translation).lpNorm<Eigen::Infinity>() <= 1e-12);
    }
  }
  SUBCASE("rotation plus drift at t = pi") {
    const AlgebraElement<double> c =
        AlgebraElement<double>::Rotation() + AlgebraElement<double>::TranslationX();
    const GroupElement<double> closed = carkin::exp(c, kPi);
    const GroupElement<double> series = ct::exp_series_oracle(c, kPi);
    CHECK(angle_distance(closed.angle, series.angle) <= 1e-10);
    CHECK((closed.translation - series.translation).lpNorm<Eigen::Infinity>() <= 1e-10);
  }
  SUBCASE("random generators") {
    ct::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
      const AlgebraElement<double> c = ct::random_algebra(rng);
      const double t = ct::uniform(rng, -2, 2);
      const GroupElement<double> closed = carkin::exp(c, t);
      const GroupElement<double> series = ct::exp_series_oracle(c, t);
      CHECK(angle_distance(closed.angle, series.angle) <= 1e-10);
      CHECK((closed.translation - series.translation).lpNorm<Eigen::Infinity>() <= 1e-10);
    }
  }
  SUBCASE("tiny spin goes through the series branch smoothly") {
    AlgebraElement<double> c = AlgebraElement<double>::TranslationY();
    c.spin = 1e-12;
    const GroupElement<double> g = carkin::exp(c, 1.0);
    const GroupElement<double> series = ct::exp_series_oracle(c, 1.0);
    CHECK((g.translation - series.translation).lpNorm<Eigen::Infinity>() <= 1e-14);
  }
}

TEST_CASE("exp is a one-parameter subgroup in its scalar argument") {
  ct::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const AlgebraElement<double> c = ct::random_algebra(rng);
    const double s = ct::uniform(rng, -2, 2);
    const double t = ct::uniform(rng, -2, 2);
    CHECK(is_approx(carkin::exp(c, s + t),
                    compose(carkin::exp(c, s), carkin::exp(c, t)), 1e-10));
  }
}

TEST_CASE("bracket reproduces the basis commutators") {
  const AlgebraElement<double> rot = AlgebraElement<double>::Rotation();
  const AlgebraElement<double> tx = AlgebraElement<double>::TranslationX();
  const AlgebraElement<double> ty = AlgebraElement<double>::TranslationY();

  CHECK((bracket(rot, tx) + ty).max_abs() == 0.0);   // [e0, e1] = -e2
  CHECK((bracket(rot, ty) - tx).max_abs() == 0.0);   // [e0, e2] = +e1
  CHECK(bracket(tx, ty).max_abs() == 0.0);           // translations commute
}

TEST_CASE("bracket equals the matrix commutator exactly") {
  ct::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const AlgebraElement<double> a = ct::random_algebra(rng);
    const AlgebraElement<double> b = ct::random_algebra(rng);
    const Mat3<double> comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    const AlgebraElement<double> via_matrix = AlgebraElement<double>::FromMatrix(comm);
    CHECK((bracket(a, b) - via_matrix).max_abs() == 0.0);
    // e(2) shape of the commutator: zero diagonal and last column,
    // antisymmetric upper block.
    CHECK(comm(0, 0) == 0.0);
    CHECK(comm(1, 1) == 0.0);
    CHECK(comm.col(2).cwiseAbs().maxCoeff() == 0.0);
    CHECK(comm(0, 1) + comm(1, 0) == 0.0);
  }
}

TEST_CASE("bracket is antisymmetric and satisfies the Jacobi identity") {
  ct::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const AlgebraElement<double> a = ct::random_algebra(rng);
    const AlgebraElement<double> b = ct::random_algebra(rng);
    const AlgebraElement<double> c = ct::random_algebra(rng);
    CHECK((bracket(a, b) + bracket(b, a)).max_abs() <= 1e-12);
    const AlgebraElement<double> jacobi = bracket(a, bracket(b, c)) +
                                          bracket(b, bracket(c, a)) +
                                          bracket(c, bracket(a, b));
    CHECK(jacobi.max_abs() <= 1e-12);
  }
}

TEST_CASE("acting twice equals acting by the composition") {
  ct::Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    const GroupElement<double> g1 = ct::random_group(rng);
    const GroupElement<double> g2 = ct::random_group(rng);
    const PlanePoint<double> p(ct::uniform(rng, -3, 3), ct::uniform(rng, -3, 3));
    const PlanePoint<double> once = act_on_point(compose(g1, g2), p);
    const PlanePoint<double> twice = act_on_point(g2, act_on_point(g1, p));
    CHECK((once - twice).lpNorm<Eigen::Infinity>() <= 1e-10);
  }
}

TEST_CASE("the core templates instantiate for float") {
  GroupElement<float> g;
  g.angle = 0.5f;
  g.translation = PlanePoint<float>(1.0f, -2.0f);
  const GroupElement<float> round = compose(g, inverse(g));
  CHECK(std::abs(round.angle) <= 1e-6f);
  CHECK(round.translation.lpNorm<Eigen::Infinity>() <= 1e-6f);

  AlgebraElement<float> c;
  c.spin = 0.7f;
  c.drift = PlanePoint<float>(0.3f, 0.1f);
  const GroupElement<float> stepped = carkin::exp(c, 0.25f);
  const GroupElement<float> doubled = carkin::exp(c, 0.5f);
  CHECK(is_approx(compose(stepped, stepped), doubled, 1e-5f));
}

TEST_CASE("the action preserves distances") {
  ct::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const GroupElement<double> g = ct::random_group(rng);
    const PlanePoint<double> p(ct::uniform(rng, -3, 3), ct::uniform(rng, -3, 3));
    const PlanePoint<double> q(ct::uniform(rng, -3, 3), ct::uniform(rng, -3, 3));
    const double before = (p - q).norm();
    const double after = (act_on_point(g, p) - act_on_point(g, q)).norm();
    CHECK(std::abs(before - after) <= 1e-12);
  }
}
