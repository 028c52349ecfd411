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

#ifndef TMSS_SPIN_CORE_HPP
#define TMSS_SPIN_CORE_HPP

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace tmss {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNormTol = 1e-9;
// Inputs whose norm is off by at most this much are silently renormalized.
inline constexpr double kRenormalizeTol = 1e-6;
inline constexpr double kImagResidueTol = 1e-10;

/// A spin quantum number j, stored as the integer 2j. Basis index 0
/// corresponds to m = -j, index 2j to m = +j.
class SpinJ {
 public:
  constexpr SpinJ() = default;

  static SpinJ from_twice(int twice_j);
  /// Accepts "0", "1", "3/2", "5/2", ... (integers or n/2).
  static SpinJ parse(std::string_view text);

  constexpr int twice_j() const { return twice_j_; }
  constexpr int dim() const { return twice_j_ + 1; }
  constexpr double value() const { return 0.5 * twice_j_; }
  constexpr double casimir() const { return value() * (value() + 1.0); }
  /// Magnetic quantum number of basis index `index`.
  constexpr double m(int index) const { return 0.5 * (2 * index - twice_j_); }
  /// Basis index of magnetic quantum number m; throws if m is not in -j..j.
  int index_of(double m) const;
  /// "1/2", "1", "3/2", ...
  std::string str() const;

  constexpr auto operator<=>(const SpinJ&) const = default;

 private:
  constexpr explicit SpinJ(int twice_j) : twice_j_(twice_j) {}
  int twice_j_ = 0;
};

enum class Axis { X, Y, Z };
enum class Sign { Plus, Minus };

/// Dense square operator on a spin or joint spin Hilbert space.
class SpinOperator {
 public:
  SpinOperator() = default;
  explicit SpinOperator(CMatrix entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const CMatrix& matrix() const { return entries_; }
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermitianTol) const { return hermiticity_defect() <= tol; }

  SpinOperator adjoint() const { return SpinOperator(entries_.adjoint()); }

  friend SpinOperator operator+(const SpinOperator& a, const SpinOperator& b);
  friend SpinOperator operator-(const SpinOperator& a, const SpinOperator& b);
  friend SpinOperator operator*(const SpinOperator& a, const SpinOperator& b);
  friend SpinOperator operator*(Complex s, const SpinOperator& a);

 private:
  CMatrix entries_;
};

struct SpinMatrices {
  SpinOperator x;
  SpinOperator y;
  SpinOperator z;

  const SpinOperator& operator[](Axis axis) const;
};

/// Jz diagonal with m ascending; Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i).
SpinMatrices spin_matrices(SpinJ j);

/// Raising operator J+ with <m+1|J+|m> = sqrt(j(j+1) - m(m+1)).
CMatrix raising_operator(SpinJ j);

/// Kronecker product; joint index is i1 * d2 + i2.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// J_k^(1) (subsystem 1) or J_k^(2) (subsystem 2) embedded in the joint space.
SpinOperator local_operator(Axis axis, int subsystem, SpinJ j1, SpinJ j2);

/// J_k ⊗ I ± I ⊗ J_k on the d1*d2 dimensional joint space.
SpinOperator two_mode_operator(Axis axis, Sign sign, SpinJ j1, SpinJ j2);

/// Pure state of a j1 ⊗ j2 system. Amplitudes are a d1 x d2 matrix whose row
/// index labels subsystem 1 and column index labels subsystem 2.
class BipartiteState {
 public:
  /// Renormalizes when |norm - 1| <= kRenormalizeTol; throws InputError otherwise.
  BipartiteState(SpinJ j1, SpinJ j2, CMatrix amplitudes);

  static BipartiteState from_joint_vector(SpinJ j1, SpinJ j2, const CVector& vec);
  /// |m1, m2>_z.
  static BipartiteState basis(SpinJ j1, SpinJ j2, double m1, double m2);

  SpinJ j1() const { return j1_; }
  SpinJ j2() const { return j2_; }
  Eigen::Index joint_dim() const { return amplitudes_.size(); }
  const CMatrix& amplitudes() const { return amplitudes_; }
  CVector joint_vector() const;

 private:
  SpinJ j1_;
  SpinJ j2_;
  CMatrix amplitudes_;
};

/// Mixed state on a joint space: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix from_pure(const BipartiteState& state);

  Eigen::Index dim() const { return entries_.rows(); }
  const CMatrix& matrix() const { return entries_; }

  /// u * rho * u^dagger, Hermitian part taken to remove round-off asymmetry.
  DensityMatrix conjugated(const CMatrix& u) const;

 private:
  struct Unchecked {};
  DensityMatrix(CMatrix entries, Unchecked) : entries_(std::move(entries)) {}

  CMatrix entries_;
};

using QuantumState = std::variant<BipartiteState, DensityMatrix>;

Eigen::Index joint_dim(const QuantumState& state);

double expectation(const BipartiteState& state, const SpinOperator& op);
double expectation(const DensityMatrix& rho, const SpinOperator& op);
double expectation(const QuantumState& state, const SpinOperator& op);

/// <op^2> - <op>^2 without clamping; may be a tiny negative number.
double variance(const BipartiteState& state, const SpinOperator& op);
double variance(const DensityMatrix& rho, const SpinOperator& op);
double variance(const QuantumState& state, const SpinOperator& op);

/// Reduced density matrix of subsystem `keep` (1 or 2).
DensityMatrix partial_trace(const DensityMatrix& rho, int keep, SpinJ j1, SpinJ j2);
DensityMatrix partial_trace(const BipartiteState& state, int keep);

/// Deterministic per-index substream seed (splitmix64 of seed and index).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Independent standard complex Gaussian amplitudes, normalized.
BipartiteState haar_random_pure(SpinJ j1, SpinJ j2, std::uint64_t seed);

/// Haar-random d x d unitary (QR of a complex Ginibre matrix with phase fix).
CMatrix haar_random_unitary(int dim, std::uint64_t seed);

}  // namespace tmss

#endif  // TMSS_SPIN_CORE_HPP
