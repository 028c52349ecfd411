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

#ifndef TMSS_NELDER_MEAD_HPP
#define TMSS_NELDER_MEAD_HPP

#include <functional>
#include <span>
#include <vector>

namespace tmss {

struct SimplexOptions {
  double initial_step = 0.1;
  int max_iters = 2000;
  double step_tol = 1e-9;
  double objective_tol = 1e-11;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using ScalarObjective = std::function<double(std::span<const double>)>;

/// Derivative-free simplex descent with dimension-adaptive coefficients
/// (reflection 1, expansion 1 + 2/n, contraction 0.75 - 1/2n, shrink 1 - 1/n).
/// Stops when the simplex diameter (max-norm) drops below step_tol, the spread
/// of objective values drops below objective_tol, or max_iters is reached.
SimplexResult nelder_mead(const ScalarObjective& f, std::vector<double> start,
                          const SimplexOptions& options);

}  // namespace tmss

#endif  // TMSS_NELDER_MEAD_HPP
