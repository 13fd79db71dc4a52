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

#ifndef CARKIN_VERIFY_HPP_
#define CARKIN_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace carkin {

/// One identity check. kUpperBound checks pass when measured <= threshold
/// (defect bounds); kLowerBound checks pass when measured >= threshold
/// (observed convergence orders).
struct VerifyCheck {
  enum class Kind { kUpperBound, kLowerBound };
  std::string name;
  Kind kind;
  double measured;
  double threshold;
  bool pass;
};

struct VerifyReport {
  std::uint64_t seed;
  std::vector<VerifyCheck> checks;

  bool all_pass() const;
  const VerifyCheck* first_failure() const;
};

/// Runs every identity check with randomness drawn from `seed`. When
/// `tolerance_override` is set it replaces the threshold of every
/// upper-bound check (order thresholds are left alone).
VerifyReport run_verification(std::uint64_t seed,
                              std::optional<double> tolerance_override = {});

/// Fixed-width table, one line per check; byte-identical for equal inputs.
std::string format_report(const VerifyReport& report);

}  // namespace carkin

#endif  // CARKIN_VERIFY_HPP_
