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

#ifndef TMSS_ERROR_HPP
#define TMSS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tmss {

// Malformed or inconsistent input: bad spin labels, dimension mismatches,
// unnormalized amplitudes, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation produced a result outside its numerical contract, e.g. an
// expectation value with a large imaginary residue.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tmss

#endif  // TMSS_ERROR_HPP
