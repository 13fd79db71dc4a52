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

#ifndef CARKIN_TRAJECTORY_IO_HPP_
#define CARKIN_TRAJECTORY_IO_HPP_

#include <string>

#include "carkin/transport.hpp"

namespace carkin {

/// CSV with header "t,alpha,beta,x,y,phi", one row per sample, 17 significant
/// digits (value-round-trip exact for doubles).
std::string trajectory_to_csv(const Trajectory<double>& traj);

/// Inverse of trajectory_to_csv. Throws std::runtime_error on malformed rows.
Trajectory<double> trajectory_from_csv(const std::string& text);

/// SVG 1.1 plot of the (x, y) path: y grows upward, the viewBox is the path
/// extent padded by 5%, the start and end are marked and heading ticks are
/// drawn every `tick_stride` samples (0 picks a stride for about 40 ticks).
std::string trajectory_to_svg(const Trajectory<double>& traj,
                              std::size_t tick_stride = 0);

/// Writes `content` to `path`, throwing std::runtime_error on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace carkin

#endif  // CARKIN_TRAJECTORY_IO_HPP_
