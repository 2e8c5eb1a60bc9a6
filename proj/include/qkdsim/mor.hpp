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

// Sequential-access no-cloning criterion for orthogonal bipartite states.
//
// Two orthogonal states a, b over (Qubit1, Qubit2) pass when their Qubit1
// marginals are neither orthogonal (tr(rho1_a rho1_b) > 0) nor identical,
// and their Qubit2 marginals are not orthogonal.

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qkdsim/quantum.hpp"

namespace qkdsim {

/// Threshold separating "orthogonal"/"identical" from their negations.
inline constexpr double kMorTol = 1e-9;

struct MorWitnesses {
  double tr_rho1_product;
  /// Max entry-wise |rho1_a - rho1_b|.
  double rho1_distance;
  double tr_rho2_product;
};

struct MorReport {
  bool rho1_orthogonal;
  bool rho1_identical;
  bool rho2_orthogonal;
  bool criterion_satisfied;
  MorWitnesses witnesses;
};

/// Throws InvalidInput unless both states are over (Qubit1, Qubit2) and
/// |<a|b>| <= 1e-10.
MorReport mor_check(const StateVector &a, const StateVector &b);

struct MorPairReport {
  std::size_t first;
  std::size_t second;
  MorReport report;
};

struct EnsembleMorReport {
  std::vector<MorPairReport> pairs;
  /// Conjunction of criterion_satisfied over every pair.
  bool criterion_satisfied;
};

/// Checks every unordered pair of `states`.
EnsembleMorReport mor_check_all(std::span<const StateVector> states);

/// psi = cos(alpha)|01> + sin(alpha)|10>, phi = cos(beta)|00> + sin(beta)|11>.
/// Rejects parameters outside the admitted domain.
std::pair<StateVector, StateVector> make_nonmax_pair(double alpha, double beta);

}  // namespace qkdsim
