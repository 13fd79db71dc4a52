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

#ifndef CARKIN_NUMERICS_HPP_
#define CARKIN_NUMERICS_HPP_

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace carkin {

/// Reduces an angle to the branch (-pi, pi].
template <typename Scalar>
Scalar wrap_to_pi(Scalar a) {
  Scalar r = std::remainder(a, Scalar(2) * std::numbers::pi_v<Scalar>);
  if (r <= -std::numbers::pi_v<Scalar>) {
    r += Scalar(2) * std::numbers::pi_v<Scalar>;
  }
  return r;
}

/// Distance between two angles on the circle, in [0, pi].
template <typename Scalar>
Scalar angle_distance(Scalar a, Scalar b) {
  return std::abs(wrap_to_pi(a - b));
}

/// Least-squares slope of log(err) against log(h), the observed order of an
/// error sequence. Zero errors are clamped to the smallest positive double so
/// that exact agreement does not produce -inf.
inline double fit_order(const std::vector<double>& h,
                        const std::vector<double>& err) {
  const std::size_t n = h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(std::max(err[i], 5e-324));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace carkin

#endif  // CARKIN_NUMERICS_HPP_
