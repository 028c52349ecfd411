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

#ifndef TMSS_SCHMIDT_HPP
#define TMSS_SCHMIDT_HPP

#include "tmss/spin_core.hpp"

#include <cstdint>
#include <span>
#include <string_view>

namespace tmss {

inline constexpr double kDefaultClassifyTol = 1e-8;

/// Schmidt coefficients in nondescending order together with local unitaries
/// mapping the state onto sum_m coeffs[m] |m, m>_z.
///
/// For unequal spins the canonical diagonal occupies the block
/// m = -j_min .. j_min of both subsystems, so coefficient k sits at
/// magnetic number m = k - j_min.
struct SchmidtForm {
  RVector coeffs;
  CMatrix u1;
  CMatrix u2;
  double residual = 0.0;
};

enum class StateClassTag { Generic, Product, MaxEntangledFull, MaxEntangledSubspace };

struct StateClass {
  StateClassTag tag = StateClassTag::Generic;
  int rank = 0;
  double tolerance_used = kDefaultClassifyTol;
};

std::string_view to_string(StateClassTag tag);

SchmidtForm schmidt_decompose(const BipartiteState& state);

/// sum_k coeffs[k] |m_k, m_k>_z with m_k = k - j_min.
BipartiteState canonical_state(SpinJ j1, SpinJ j2, std::span<const double> coeffs);

struct CanonicalResult {
  BipartiteState canonical;
  SchmidtForm form;
};

CanonicalResult canonicalize(const BipartiteState& state);

/// Coefficients are compared against tol * max(coeffs): anything below counts
/// as zero, and two nonzero values within that margin count as equal.
StateClass classify(std::span<const double> coeffs, double tol = kDefaultClassifyTol);
StateClass classify(const SchmidtForm& form, double tol = kDefaultClassifyTol);

/// `count` uniform draws, sorted ascending and scaled to unit sum of squares.
RVector random_nondescending_coefficients(int count, std::uint64_t seed);

}  // namespace tmss

#endif  // TMSS_SCHMIDT_HPP
