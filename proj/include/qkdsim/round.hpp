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

#pragma once

#include <cstdint>
#include <optional>

#include "qkdsim/eavesdrop.hpp"
#include "qkdsim/protocol.hpp"
#include "qkdsim/quantum.hpp"
#include "qkdsim/random.hpp"

namespace qkdsim {

struct RoundTranscript {
  KeySymbol alice_symbol;
  KeySymbol bob_symbol;
  EveKnowledge eve_knowledge;
  /// <encoded| rho_bob |encoded> for the delivered two-qubit state.
  double bob_fidelity;
  std::uint32_t qubits_used;
  std::uint32_t classical_bits_used;
  /// Bob's reduced state over (Qubit1, Qubit2).
  DensityMatrix bob_state;
  /// Every channel qubit plus Eve's ancilla, if she used one.
  StateVector final_state;
};

/// Ideal projective measurement onto the ensemble's signal states.
KeySymbol bob_decode(const StateVector &received, const StateEnsemble &ensemble, RandomStream &rng);
KeySymbol bob_decode(const DensityMatrix &received, const StateEnsemble &ensemble, RandomStream &rng);

/// One protocol round: encode, let the attack see Qubit1 (plus its
/// ancilla), deliver Qubit1, let it see Qubit2, deliver Qubit2, decode.
RoundTranscript run_round(const StateEnsemble &ensemble, const AttackStrategy &attack, KeySymbol symbol,
                          RandomStream &rng, const RoundObserver *observer = nullptr);

}  // namespace qkdsim
