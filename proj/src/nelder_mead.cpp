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

#include "tmss/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tmss {

namespace {

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

// Combination a + t * (b - a).
std::vector<double> along(const std::vector<double>& a, const std::vector<double>& b, double t) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

}  // namespace

SimplexResult nelder_mead(const ScalarObjective& f, std::vector<double> start,
                          const SimplexOptions& options) {
  const std::size_t n = start.size();
  SimplexResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = f(std::span<const double>(x));
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  if (n == 0) {
    result.value = eval(start);
    result.x = std::move(start);
    result.converged = true;
    return result;
  }

  const double dn = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dn;
  const double contract = 0.75 - 0.5 / dn;
  const double shrink = 1.0 - 1.0 / dn;

  std::vector<Vertex> simplex(n + 1);
  simplex[0].x = start;
  simplex[0].f = eval(start);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1].x = start;
    simplex[i + 1].x[i] += options.initial_step;
    simplex[i + 1].f = eval(simplex[i + 1].x);
  }

  std::vector<double> centroid(n);
  while (true) {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });

    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        diameter = std::max(diameter, std::abs(simplex[i].x[k] - simplex[0].x[k]));
      }
    }
    const double spread = simplex[n].f - simplex[0].f;
    if (diameter < options.step_tol || spread < options.objective_tol) {
      result.converged = true;
      break;
    }
    if (result.iterations >= options.max_iters) break;
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i].x[k];
    }
    for (double& c : centroid) c /= dn;

    Vertex& worst = simplex[n];
    const Vertex reflected{along(centroid, worst.x, -reflect), 0.0};
    const double fr = eval(reflected.x);

    if (fr < simplex[0].f) {
      std::vector<double> xe = along(centroid, worst.x, -expand);
      const double fe = eval(xe);
      if (fe < fr) {
        worst = {std::move(xe), fe};
      } else {
        worst = {reflected.x, fr};
      }
      continue;
    }
    if (fr < simplex[n - 1].f) {
      worst = {reflected.x, fr};
      continue;
    }

    bool accepted = false;
    if (fr < worst.f) {
      std::vector<double> xc = along(centroid, reflected.x, contract);
      const double fc = eval(xc);
      if (fc <= fr) {
        worst = {std::move(xc), fc};
        accepted = true;
      }
    } else {
      std::vector<double> xc = along(centroid, worst.x, contract);
      const double fc = eval(xc);
      if (fc < worst.f) {
        worst = {std::move(xc), fc};
        accepted = true;
      }
    }
    if (accepted) continue;

    for (std::size_t i = 1; i <= n; ++i) {
      simplex[i].x = along(simplex[0].x, simplex[i].x, shrink);
      simplex[i].f = eval(simplex[i].x);
    }
  }

  result.x = simplex[0].x;
  result.value = simplex[0].f;
  return result;
}

}  // namespace tmss
