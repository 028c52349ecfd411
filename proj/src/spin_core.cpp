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

#include "tmss/spin_core.hpp"

#include "tmss/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <utility>

namespace tmss {

namespace {

int parse_nonnegative(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || value < 0) {
    throw InputError("invalid spin label '" + std::string(whole) + "'");
  }
  return value;
}

// Accepts the Hermitian part of `m` as a density matrix after validation.
CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

void check_joint_dim(Eigen::Index state_dim, const SpinOperator& op) {
  if (op.dim() != state_dim) {
    throw InputError("operator dimension " + std::to_string(op.dim()) +
                     " does not match state dimension " + std::to_string(state_dim));
  }
}

double real_or_throw(Complex value) {
  const double scale = std::max(1.0, std::abs(value.real()));
  if (std::abs(value.imag()) > kImagResidueTol * scale) {
    throw NumericalError("expectation value has imaginary residue " +
                         std::to_string(value.imag()) + "; operator is not Hermitian");
  }
  return value.real();
}

}  // namespace

SpinJ SpinJ::from_twice(int twice_j) {
  if (twice_j < 0) throw InputError("spin must be nonnegative");
  return SpinJ(twice_j);
}

SpinJ SpinJ::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return SpinJ(2 * parse_nonnegative(text, text));
  }
  const int numerator = parse_nonnegative(text.substr(0, slash), text);
  const int denominator = parse_nonnegative(text.substr(slash + 1), text);
  if (denominator == 2) return SpinJ(numerator);
  if (denominator == 1) return SpinJ(2 * numerator);
  throw InputError("invalid spin label '" + std::string(text) + "': denominator must be 1 or 2");
}

int SpinJ::index_of(double m) const {
  const double shifted = 2.0 * m + twice_j_;
  const long twice_index = std::lround(shifted);
  if (std::abs(shifted - static_cast<double>(twice_index)) > 1e-12 || twice_index % 2 != 0 ||
      twice_index < 0 || twice_index > 2 * twice_j_) {
    throw InputError("magnetic quantum number " + std::to_string(m) + " is not valid for j = " +
                     str());
  }
  return static_cast<int>(twice_index / 2);
}

std::string SpinJ::str() const {
  if (twice_j_ % 2 == 0) return std::to_string(twice_j_ / 2);
  return std::to_string(twice_j_) + "/2";
}

SpinOperator::SpinOperator(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw InputError("spin operator must be a nonempty square matrix");
  }
}

double SpinOperator::hermiticity_defect() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

SpinOperator operator+(const SpinOperator& a, const SpinOperator& b) {
  return SpinOperator(a.entries_ + b.entries_);
}
SpinOperator operator-(const SpinOperator& a, const SpinOperator& b) {
  return SpinOperator(a.entries_ - b.entries_);
}
SpinOperator operator*(const SpinOperator& a, const SpinOperator& b) {
  return SpinOperator(a.entries_ * b.entries_);
}
SpinOperator operator*(Complex s, const SpinOperator& a) { return SpinOperator(s * a.entries_); }

const SpinOperator& SpinMatrices::operator[](Axis axis) const {
  switch (axis) {
    case Axis::X:
      return x;
    case Axis::Y:
      return y;
    case Axis::Z:
      return z;
  }
  return z;
}

CMatrix raising_operator(SpinJ j) {
  const int d = j.dim();
  CMatrix plus = CMatrix::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) {
    const double m = j.m(i);
    plus(i + 1, i) = std::sqrt(j.casimir() - m * (m + 1.0));
  }
  return plus;
}

SpinMatrices spin_matrices(SpinJ j) {
  const int d = j.dim();
  const CMatrix plus = raising_operator(j);
  const CMatrix minus = plus.adjoint();
  CMatrix z = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) z(i, i) = j.m(i);
  const Complex two_i(0.0, 2.0);
  return {SpinOperator(0.5 * (plus + minus)), SpinOperator((plus - minus) / two_i),
          SpinOperator(std::move(z))};
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

SpinOperator local_operator(Axis axis, int subsystem, SpinJ j1, SpinJ j2) {
  if (subsystem == 1) {
    return SpinOperator(kron(spin_matrices(j1)[axis].matrix(), CMatrix::Identity(j2.dim(), j2.dim())));
  }
  if (subsystem == 2) {
    return SpinOperator(kron(CMatrix::Identity(j1.dim(), j1.dim()), spin_matrices(j2)[axis].matrix()));
  }
  throw InputError("subsystem must be 1 or 2");
}

SpinOperator two_mode_operator(Axis axis, Sign sign, SpinJ j1, SpinJ j2) {
  const SpinOperator first = local_operator(axis, 1, j1, j2);
  const SpinOperator second = local_operator(axis, 2, j1, j2);
  return sign == Sign::Plus ? first + second : first - second;
}

BipartiteState::BipartiteState(SpinJ j1, SpinJ j2, CMatrix amplitudes)
    : j1_(j1), j2_(j2), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.rows() != j1.dim() || amplitudes_.cols() != j2.dim()) {
    throw InputError("amplitude matrix is " + std::to_string(amplitudes_.rows()) + "x" +
                     std::to_string(amplitudes_.cols()) + ", expected " + std::to_string(j1.dim()) +
                     "x" + std::to_string(j2.dim()));
  }
  if (!amplitudes_.allFinite()) throw InputError("amplitudes must be finite");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kRenormalizeTol) {
    throw InputError("state norm " + std::to_string(norm) + " deviates from 1 by more than 1e-6");
  }
  amplitudes_ /= norm;
}

BipartiteState BipartiteState::from_joint_vector(SpinJ j1, SpinJ j2, const CVector& vec) {
  if (vec.size() != static_cast<Eigen::Index>(j1.dim()) * j2.dim()) {
    throw InputError("joint vector has length " + std::to_string(vec.size()) + ", expected " +
                     std::to_string(j1.dim() * j2.dim()));
  }
  // Row-major reshape: joint index i1 * d2 + i2.
  CMatrix amps(j1.dim(), j2.dim());
  for (int i1 = 0; i1 < j1.dim(); ++i1) {
    for (int i2 = 0; i2 < j2.dim(); ++i2) amps(i1, i2) = vec(i1 * j2.dim() + i2);
  }
  return BipartiteState(j1, j2, std::move(amps));
}

BipartiteState BipartiteState::basis(SpinJ j1, SpinJ j2, double m1, double m2) {
  CMatrix amps = CMatrix::Zero(j1.dim(), j2.dim());
  amps(j1.index_of(m1), j2.index_of(m2)) = 1.0;
  return BipartiteState(j1, j2, std::move(amps));
}

CVector BipartiteState::joint_vector() const {
  const auto d1 = amplitudes_.rows();
  const auto d2 = amplitudes_.cols();
  CVector vec(d1 * d2);
  for (Eigen::Index i1 = 0; i1 < d1; ++i1) {
    for (Eigen::Index i2 = 0; i2 < d2; ++i2) vec(i1 * d2 + i2) = amplitudes_(i1, i2);
  }
  return vec;
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw InputError("density matrix must be a nonempty square matrix");
  }
  if (!entries_.allFinite()) throw InputError("density matrix entries must be finite");
  const double defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermitianTol) {
    throw InputError("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const Complex trace = entries_.trace();
  if (std::abs(trace - 1.0) > kNormTol) {
    throw InputError("density matrix trace " + std::to_string(trace.real()) + " is not 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kNormTol) {
    throw InputError("density matrix is not positive semidefinite (min eigenvalue " +
                     std::to_string(solver.eigenvalues().minCoeff()) + ")");
  }
}

DensityMatrix DensityMatrix::from_pure(const BipartiteState& state) {
  const CVector v = state.joint_vector();
  return DensityMatrix(hermitian_part(v * v.adjoint()), Unchecked{});
}

DensityMatrix DensityMatrix::conjugated(const CMatrix& u) const {
  if (u.rows() != dim() || u.cols() != dim()) {
    throw InputError("conjugating unitary has wrong dimension");
  }
  return DensityMatrix(hermitian_part(u * entries_ * u.adjoint()), Unchecked{});
}

Eigen::Index joint_dim(const QuantumState& state) {
  return std::visit(
      [](const auto& s) -> Eigen::Index {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, BipartiteState>) {
          return s.joint_dim();
        } else {
          return s.dim();
        }
      },
      state);
}

double expectation(const BipartiteState& state, const SpinOperator& op) {
  check_joint_dim(state.joint_dim(), op);
  const CVector v = state.joint_vector();
  return real_or_throw(v.dot(op.matrix() * v));
}

double expectation(const DensityMatrix& rho, const SpinOperator& op) {
  check_joint_dim(rho.dim(), op);
  return real_or_throw(rho.matrix().cwiseProduct(op.matrix().transpose()).sum());
}

double expectation(const QuantumState& state, const SpinOperator& op) {
  return std::visit([&](const auto& s) { return expectation(s, op); }, state);
}

double variance(const BipartiteState& state, const SpinOperator& op) {
  check_joint_dim(state.joint_dim(), op);
  if (op.hermiticity_defect() > kHermitianTol) {
    throw NumericalError("variance requires a Hermitian operator");
  }
  // <op^2> = |op v|^2 for Hermitian op.
  const CVector v = state.joint_vector();
  const CVector w = op.matrix() * v;
  const double mean = real_or_throw(v.dot(w));
  const double second = w.squaredNorm();
  return second - mean * mean;
}

double variance(const DensityMatrix& rho, const SpinOperator& op) {
  const double mean = expectation(rho, op);
  const double second = expectation(rho, op * op);
  return second - mean * mean;
}

double variance(const QuantumState& state, const SpinOperator& op) {
  return std::visit([&](const auto& s) { return variance(s, op); }, state);
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep, SpinJ j1, SpinJ j2) {
  const int d1 = j1.dim();
  const int d2 = j2.dim();
  if (rho.dim() != static_cast<Eigen::Index>(d1) * d2) {
    throw InputError("density matrix dimension " + std::to_string(rho.dim()) +
                     " does not match d1*d2 = " + std::to_string(d1 * d2));
  }
  const CMatrix& m = rho.matrix();
  CMatrix reduced;
  if (keep == 1) {
    reduced = CMatrix::Zero(d1, d1);
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d1; ++b)
        for (int k = 0; k < d2; ++k) reduced(a, b) += m(a * d2 + k, b * d2 + k);
  } else if (keep == 2) {
    reduced = CMatrix::Zero(d2, d2);
    for (int a = 0; a < d2; ++a)
      for (int b = 0; b < d2; ++b)
        for (int k = 0; k < d1; ++k) reduced(a, b) += m(k * d2 + a, k * d2 + b);
  } else {
    throw InputError("subsystem to keep must be 1 or 2");
  }
  return DensityMatrix(hermitian_part(reduced));
}

DensityMatrix partial_trace(const BipartiteState& state, int keep) {
  const CMatrix& a = state.amplitudes();
  if (keep == 1) return DensityMatrix(hermitian_part(a * a.adjoint()));
  if (keep == 2) return DensityMatrix(hermitian_part(a.transpose() * a.conjugate()));
  throw InputError("subsystem to keep must be 1 or 2");
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer applied to a golden-ratio stride.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

BipartiteState haar_random_pure(SpinJ j1, SpinJ j2, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix amps(j1.dim(), j2.dim());
  for (int i1 = 0; i1 < j1.dim(); ++i1) {
    for (int i2 = 0; i2 < j2.dim(); ++i2) {
      const double re = normal(engine);
      const double im = normal(engine);
      amps(i1, i2) = Complex(re, im);
    }
  }
  amps /= amps.norm();
  return BipartiteState(j1, j2, std::move(amps));
}

CMatrix haar_random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      const double re = normal(engine);
      const double im = normal(engine);
      z(i, k) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

}  // namespace tmss
