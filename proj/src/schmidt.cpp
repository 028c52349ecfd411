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

#include "tmss/schmidt.hpp"

#include "tmss/error.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace tmss {

std::string_view to_string(StateClassTag tag) {
  switch (tag) {
    case StateClassTag::Generic:
      return "Generic";
    case StateClassTag::Product:
      return "Product";
    case StateClassTag::MaxEntangledFull:
      return "MaxEntangledFull";
    case StateClassTag::MaxEntangledSubspace:
      return "MaxEntangledSubspace";
  }
  return "Generic";
}

SchmidtForm schmidt_decompose(const BipartiteState& state) {
  const CMatrix& a = state.amplitudes();
  const int d1 = state.j1().dim();
  const int d2 = state.j2().dim();
  const int rank = std::min(d1, d2);
  // Offsets of the m = -j_min slot in each subsystem.
  const int off1 = (d1 - rank) / 2;
  const int off2 = (d2 - rank) / 2;

  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();  // descending
  const CMatrix& u = svd.matrixU();
  const CMatrix& v = svd.matrixV();

  // a = sum_k s_k u_k v_k^dagger, so u_k^dagger a conj(v_k) = s_k. Singular
  // vector k (k-th largest) goes to slot rank-1-k, i.e. nondescending in m.
  SchmidtForm form;
  form.coeffs.resize(rank);
  form.u1 = CMatrix::Zero(d1, d1);
  form.u2 = CMatrix::Zero(d2, d2);

  auto place = [](CMatrix& target, const CMatrix& vecs, int dim, int offset, int rank, bool conj) {
    std::vector<bool> used(dim, false);
    for (int k = 0; k < rank; ++k) {
      const int row = offset + rank - 1 - k;
      target.row(row) = conj ? CVector(vecs.col(k).conjugate()).transpose()
                             : CVector(vecs.col(k)).transpose();
      used[row] = true;
    }
    // Remaining basis vectors (kernel directions) fill the unused rows in order.
    int next = rank;
    for (int row = 0; row < dim; ++row) {
      if (used[row]) continue;
      target.row(row) = conj ? CVector(vecs.col(next).conjugate()).transpose()
                             : CVector(vecs.col(next)).transpose();
      ++next;
    }
  };
  place(form.u1, u, d1, off1, rank, true);
  place(form.u2, v, d2, off2, rank, false);

  for (int k = 0; k < rank; ++k) form.coeffs(rank - 1 - k) = sv(k);

  CMatrix target = CMatrix::Zero(d1, d2);
  for (int k = 0; k < rank; ++k) target(off1 + k, off2 + k) = form.coeffs(k);
  form.residual = (form.u1 * a * form.u2.transpose() - target).cwiseAbs().maxCoeff();
  return form;
}

BipartiteState canonical_state(SpinJ j1, SpinJ j2, std::span<const double> coeffs) {
  const int d1 = j1.dim();
  const int d2 = j2.dim();
  const int rank = std::min(d1, d2);
  if (static_cast<int>(coeffs.size()) != rank) {
    throw InputError("expected " + std::to_string(rank) + " Schmidt coefficients, got " +
                     std::to_string(coeffs.size()));
  }
  const int off1 = (d1 - rank) / 2;
  const int off2 = (d2 - rank) / 2;
  CMatrix amps = CMatrix::Zero(d1, d2);
  for (int k = 0; k < rank; ++k) amps(off1 + k, off2 + k) = coeffs[k];
  return BipartiteState(j1, j2, std::move(amps));
}

CanonicalResult canonicalize(const BipartiteState& state) {
  SchmidtForm form = schmidt_decompose(state);
  BipartiteState canonical = canonical_state(
      state.j1(), state.j2(), std::span<const double>(form.coeffs.data(), form.coeffs.size()));
  return {std::move(canonical), std::move(form)};
}

StateClass classify(std::span<const double> coeffs, double tol) {
  if (coeffs.empty()) throw InputError("cannot classify an empty coefficient vector");
  if (!(tol >= 0.0)) throw InputError("classification tolerance must be nonnegative");
  const double largest = *std::max_element(coeffs.begin(), coeffs.end());
  const double threshold = tol * largest;

  StateClass out;
  out.tolerance_used = tol;
  double lo = largest;
  double hi = 0.0;
  for (double c : coeffs) {
    if (c > threshold) {
      ++out.rank;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  const bool nonzero_equal = hi - lo <= threshold;
  if (out.rank <= 1) {
    out.tag = StateClassTag::Product;
  } else if (!nonzero_equal) {
    out.tag = StateClassTag::Generic;
  } else if (out.rank == static_cast<int>(coeffs.size())) {
    out.tag = StateClassTag::MaxEntangledFull;
  } else {
    out.tag = StateClassTag::MaxEntangledSubspace;
  }
  return out;
}

StateClass classify(const SchmidtForm& form, double tol) {
  return classify(std::span<const double>(form.coeffs.data(), form.coeffs.size()), tol);
}

RVector random_nondescending_coefficients(int count, std::uint64_t seed) {
  if (count < 1) throw InputError("coefficient count must be positive");
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> draws(static_cast<std::size_t>(count));
  for (double& x : draws) x = uniform(engine);
  std::sort(draws.begin(), draws.end());
  RVector out = Eigen::Map<RVector>(draws.data(), count);
  return out / out.norm();
}

}  // namespace tmss
