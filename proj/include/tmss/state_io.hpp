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

#ifndef TMSS_STATE_IO_HPP
#define TMSS_STATE_IO_HPP

#include "tmss/spin_core.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tmss {

enum class StateKind { Pure, Density };

/// On-disk state description:
///   {"j1": "1/2", "j2": "1", "kind": "pure", "amplitudes": [[re, im], ...]}
/// Spins are "n/2" strings or integers. Pure states list d1*d2 amplitudes in
/// row-major order (index i1*d2 + i2); density states list (d1*d2)^2 entries.
struct StateFile {
  SpinJ j1;
  SpinJ j2;
  StateKind kind = StateKind::Pure;
  std::vector<Complex> amplitudes;
};

/// Throws InputError naming the offending field.
StateFile parse_state_file(const nlohmann::json& doc);
StateFile read_state_file(std::istream& in);

nlohmann::json to_json(const StateFile& file);

StateFile to_state_file(const BipartiteState& state);
StateFile to_state_file(const DensityMatrix& rho, SpinJ j1, SpinJ j2);

/// Validates and builds the in-memory state.
QuantumState to_quantum_state(const StateFile& file);

nlohmann::json complex_to_json(Complex z);
nlohmann::json matrix_to_json(const CMatrix& m);  // rows of [re, im] pairs

/// Deterministic JSON text: sorted keys, floating point printed with 17
/// significant digits, two-space indentation (indent < 0 for a single line).
std::string canonical_dump(const nlohmann::json& doc, int indent = 2);

std::string sha256_hex(std::string_view data);

}  // namespace tmss

#endif  // TMSS_STATE_IO_HPP
