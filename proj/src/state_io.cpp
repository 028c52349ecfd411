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

#include "tmss/state_io.hpp"

#include "tmss/error.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>
#include <sstream>

namespace tmss {

namespace {

using nlohmann::json;

SpinJ parse_spin_field(const json& doc, const char* field) {
  if (!doc.contains(field)) throw InputError(std::string("missing field '") + field + "'");
  const json& v = doc.at(field);
  try {
    if (v.is_string()) return SpinJ::parse(v.get<std::string>());
    if (v.is_number_integer() || v.is_number_unsigned()) {
      return SpinJ::from_twice(2 * v.get<int>());
    }
  } catch (const InputError& e) {
    throw InputError(std::string("field '") + field + "': " + e.what());
  }
  throw InputError(std::string("field '") + field +
                   "': spin must be an integer or a string such as \"3/2\"");
}

Complex parse_complex(const json& v, std::size_t index) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw InputError("field 'amplitudes': entry " + std::to_string(index) +
                     " must be a [re, im] pair of numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::string format_double(double x) {
  if (!std::isfinite(x)) throw NumericalError("cannot serialize non-finite number");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void dump_value(const json& v, int indent, int depth, std::string& out) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      // nlohmann::json objects are std::map-backed, so iteration is key-sorted.
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_value(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays ([re, im] pairs) stay on one line.
      const bool inline_array =
          v.size() <= 2 && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); });
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += inline_array && indent >= 0 ? ", " : ",";
        first = false;
        if (!inline_array) newline(depth + 1);
        dump_value(e, indent, depth + 1, out);
      }
      if (!inline_array) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

StateFile parse_state_file(const json& doc) {
  if (!doc.is_object()) throw InputError("state file must be a JSON object");
  StateFile file;
  file.j1 = parse_spin_field(doc, "j1");
  file.j2 = parse_spin_field(doc, "j2");
  if (doc.contains("kind")) {
    const json& kind = doc.at("kind");
    if (kind == "pure") {
      file.kind = StateKind::Pure;
    } else if (kind == "density") {
      file.kind = StateKind::Density;
    } else {
      throw InputError("field 'kind': expected \"pure\" or \"density\"");
    }
  }
  if (!doc.contains("amplitudes")) throw InputError("missing field 'amplitudes'");
  const json& amps = doc.at("amplitudes");
  if (!amps.is_array()) throw InputError("field 'amplitudes': expected an array");
  const std::size_t joint = static_cast<std::size_t>(file.j1.dim()) * file.j2.dim();
  const std::size_t expected = file.kind == StateKind::Pure ? joint : joint * joint;
  if (amps.size() != expected) {
    throw InputError("field 'amplitudes': expected " + std::to_string(expected) + " entries, got " +
                     std::to_string(amps.size()));
  }
  file.amplitudes.reserve(expected);
  for (std::size_t i = 0; i < amps.size(); ++i) file.amplitudes.push_back(parse_complex(amps[i], i));
  return file;
}

StateFile read_state_file(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_state_file(doc);
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const StateFile& file) {
  json amps = json::array();
  for (const Complex& z : file.amplitudes) amps.push_back(complex_to_json(z));
  return {{"j1", file.j1.str()},
          {"j2", file.j2.str()},
          {"kind", file.kind == StateKind::Pure ? "pure" : "density"},
          {"amplitudes", std::move(amps)}};
}

StateFile to_state_file(const BipartiteState& state) {
  StateFile file{state.j1(), state.j2(), StateKind::Pure, {}};
  const CVector v = state.joint_vector();
  file.amplitudes.assign(v.data(), v.data() + v.size());
  return file;
}

StateFile to_state_file(const DensityMatrix& rho, SpinJ j1, SpinJ j2) {
  if (rho.dim() != static_cast<Eigen::Index>(j1.dim()) * j2.dim()) {
    throw InputError("density matrix dimension does not match spins");
  }
  StateFile file{j1, j2, StateKind::Density, {}};
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    for (Eigen::Index c = 0; c < rho.dim(); ++c) file.amplitudes.push_back(rho.matrix()(r, c));
  }
  return file;
}

QuantumState to_quantum_state(const StateFile& file) {
  const int d1 = file.j1.dim();
  const int d2 = file.j2.dim();
  if (file.kind == StateKind::Pure) {
    CVector v = Eigen::Map<const CVector>(file.amplitudes.data(),
                                          static_cast<Eigen::Index>(file.amplitudes.size()));
    return BipartiteState::from_joint_vector(file.j1, file.j2, v);
  }
  const int d = d1 * d2;
  if (static_cast<int>(file.amplitudes.size()) != d * d) {
    throw InputError("field 'amplitudes': density entry count does not match spins");
  }
  CMatrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = file.amplitudes[static_cast<std::size_t>(r * d + c)];
  return DensityMatrix(std::move(m));
}

std::string canonical_dump(const json& doc, int indent) {
  std::string out;
  dump_value(doc, indent, 0, out);
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw NumericalError("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

}  // namespace tmss
