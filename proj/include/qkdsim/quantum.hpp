// Copyright 2026 The qkdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense state-vector and density-matrix arithmetic for 1-4 labeled qubits.
//
// Basis indices are big-endian over a state's qubit order: the first label
// is the most significant bit. For order (Qubit1, Qubit2) index 2 is |10>.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qkdsim/random.hpp"

namespace qkdsim {

using Amplitude = std::complex<double>;

enum class QubitId : std::uint8_t { Qubit1, Qubit2, EveAncilla, Aux };

std::string_view to_string(QubitId q);

inline constexpr std::size_t kMaxQubits = 4;
inline constexpr double kExactTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;

/// Normalized amplitude vector over an ordered list of distinct qubits.
/// Construction validates every invariant; instances are immutable.
class StateVector {
 public:
  StateVector(std::vector<QubitId> order, std::vector<Amplitude> amplitudes);

  /// Computational basis state |index> over `order`.
  static StateVector basis(std::vector<QubitId> order, std::size_t index);

  const std::vector<QubitId> &qubit_order() const { return order_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude operator[](std::size_t index) const { return amps_[index]; }
  std::size_t num_qubits() const { return order_.size(); }
  std::size_t dim() const { return amps_.size(); }

  bool contains(QubitId q) const;
  /// Position of `q` in the qubit order; throws InvalidInput if absent.
  std::size_t position(QubitId q) const;
  /// Bit of the basis index that carries `q`.
  std::size_t mask(QubitId q) const { return std::size_t{1} << (num_qubits() - 1 - position(q)); }

 private:
  std::vector<QubitId> order_;
  std::vector<Amplitude> amps_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix over labeled qubits.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<QubitId> order, Eigen::MatrixXcd entries);

  const std::vector<QubitId> &qubit_order() const { return order_; }
  const Eigen::MatrixXcd &entries() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  Amplitude operator()(std::size_t r, std::size_t c) const { return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)); }

  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;

 private:
  std::vector<QubitId> order_;
  Eigen::MatrixXcd m_;
};

struct MeasurementOutcome {
  int result;
  /// Born probability of `result`, computed before collapse.
  double probability;
  StateVector post_state;
};

/// <a|b>. Both states must share the same qubit order.
Amplitude inner_product(const StateVector &a, const StateVector &b);

StateVector tensor_product(const StateVector &a, const StateVector &b);

StateVector apply_cnot(const StateVector &state, QubitId control, QubitId target);

/// Probability that `q` reads 0, then 1.
std::array<double, 2> qubit_probabilities(const StateVector &state, QubitId q);

/// Computational-basis measurement of `q`; the outcome is drawn from `rng`.
MeasurementOutcome measure_qubit(const StateVector &state, QubitId q, RandomStream &rng);

/// Born probabilities |<basis_i|state>|^2. The basis must be orthonormal and
/// the state must lie in its span.
std::vector<double> project_onto_basis(const StateVector &state, std::span<const StateVector> basis);
/// Mixed-state version: <basis_i|rho|basis_i>.
std::vector<double> project_onto_basis(const DensityMatrix &rho, std::span<const StateVector> basis);

/// |state><state|.
DensityMatrix density_of(const StateVector &state);

/// Partial trace over every qubit not in `keep`. The result keeps the
/// surviving qubits in the state's order.
DensityMatrix reduced_density(const StateVector &state, std::span<const QubitId> keep);
DensityMatrix reduced_density(const StateVector &state, std::initializer_list<QubitId> keep);

/// tr(a b), real part; the imaginary residue must be below 1e-12.
double trace_product(const DensityMatrix &a, const DensityMatrix &b);

double purity(const DensityMatrix &rho);

/// |<reference|state>|^2.
double fidelity_to(const StateVector &state, const StateVector &reference);
/// <reference|rho|reference>.
double fidelity_to(const DensityMatrix &rho, const StateVector &reference);

/// Largest entry-wise |a - b|.
double max_entry_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Ket notation, e.g. "0.70710678118654757|10> - 0.70710678118654757|01>".
std::string to_ket_string(const StateVector &state);

}  // namespace qkdsim
