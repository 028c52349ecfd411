// Copyright 2026 The tmss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TMSS_SELFTEST_HPP
#define TMSS_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tmss {

enum class SelftestFault {
  None,
  // Builds the canonical state with coefficients in descending m order, which
  // must break the closed-form witness identity.
  CoefficientOrder,
};

struct SelftestOptions {
  bool quick = false;
  SelftestFault fault = SelftestFault::None;
  std::uint64_t seed = 0;
};

struct SelftestRow {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst observed deviation (or margin, see detail)
  double tolerance = 0.0;
  std::string detail;
};

/// Invariant battery: spin algebra, closed form vs dense matrices, moment
/// identities, symmetry, Schmidt reconstruction, uncertainty bound, variance
/// concavity and boundary cases.
std::vector<SelftestRow> run_selftest(const SelftestOptions& options);

}  // namespace tmss

#endif  // TMSS_SELFTEST_HPP
