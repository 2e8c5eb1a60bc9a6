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

#include "qkdsim/mor.hpp"

#include <cmath>

#include "qkdsim/errors.hpp"
#include "qkdsim/format.hpp"
#include "qkdsim/protocol.hpp"

namespace qkdsim {

MorReport mor_check(const StateVector &a, const StateVector &b) {
  const std::vector<QubitId> channel{QubitId::Qubit1, QubitId::Qubit2};
  if (a.qubit_order() != channel || b.qubit_order() != channel) {
    throw InvalidInput("mor_check: both states must be over (Qubit1, Qubit2)");
  }
  const double overlap = std::abs(inner_product(a, b));
  if (overlap > kSpectralTol) {
    throw InvalidInput("mor_check: states are not orthogonal (|<a|b>| = " + format_real(overlap) + ")");
  }

  const DensityMatrix rho1_a = reduced_density(a, {QubitId::Qubit1});
  const DensityMatrix rho1_b = reduced_density(b, {QubitId::Qubit1});
  const DensityMatrix rho2_a = reduced_density(a, {QubitId::Qubit2});
  const DensityMatrix rho2_b = reduced_density(b, {QubitId::Qubit2});

  MorReport r{};
  r.witnesses.tr_rho1_product = trace_product(rho1_a, rho1_b);
  r.witnesses.rho1_distance = max_entry_distance(rho1_a, rho1_b);
  r.witnesses.tr_rho2_product = trace_product(rho2_a, rho2_b);
  r.rho1_orthogonal = r.witnesses.tr_rho1_product <= kMorTol;
  r.rho1_identical = r.witnesses.rho1_distance <= kMorTol;
  r.rho2_orthogonal = r.witnesses.tr_rho2_product <= kMorTol;
  r.criterion_satisfied = !r.rho1_orthogonal && !r.rho1_identical && !r.rho2_orthogonal;
  return r;
}

EnsembleMorReport mor_check_all(std::span<const StateVector> states) {
  if (states.size() < 2) throw InvalidInput("mor_check_all: need at least two states");
  EnsembleMorReport out{{}, true};
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      MorReport r = mor_check(states[i], states[j]);
      out.criterion_satisfied = out.criterion_satisfied && r.criterion_satisfied;
      out.pairs.push_back({i, j, r});
    }
  }
  return out;
}

std::pair<StateVector, StateVector> make_nonmax_pair(double alpha, double beta) {
  return nonmax_states(alpha, beta);
}

}  // namespace qkdsim
