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

#include "qkdsim/round.hpp"

#include <bit>

#include "qkdsim/errors.hpp"

namespace qkdsim {

namespace {

constexpr std::uint32_t kChannelQubits = 2;

void check_knowledge(const EveKnowledge &k, const StateEnsemble &ensemble) {
  const auto all = static_cast<std::uint8_t>((1U << ensemble.size()) - 1U);
  if ((k.candidates() & ~all) != 0) {
    throw InvariantViolation("attack reported " + k.to_string() + ", outside the " + std::string(ensemble.name()) +
                             " alphabet");
  }
  if (k.kind() == EveKnowledge::Kind::Partition && k.candidates() == all) {
    throw InvariantViolation("attack reported a partition equal to the whole alphabet");
  }
}

}  // namespace

KeySymbol bob_decode(const StateVector &received, const StateEnsemble &ensemble, RandomStream &rng) {
  const auto probs = project_onto_basis(received, ensemble.states());
  return KeySymbol(static_cast<int>(rng.choose(probs)));
}

KeySymbol bob_decode(const DensityMatrix &received, const StateEnsemble &ensemble, RandomStream &rng) {
  const auto probs = project_onto_basis(received, ensemble.states());
  return KeySymbol(static_cast<int>(rng.choose(probs)));
}

RoundTranscript run_round(const StateEnsemble &ensemble, const AttackStrategy &attack, KeySymbol symbol,
                          RandomStream &rng, const RoundObserver *observer) {
  if (!attack.supports(ensemble)) {
    throw InvalidInput("attack '" + std::string(attack.name()) + "' does not support the " +
                       std::string(ensemble.name()) + " ensemble");
  }
  const StateVector encoded = encode(ensemble, symbol);
  StateVector global = encoded;
  if (observer) (*observer)("encode symbol " + std::to_string(symbol.value()), global, std::nullopt);
  if (auto ancilla = attack.prepare()) {
    if (ancilla->qubit_order() != std::vector<QubitId>{QubitId::EveAncilla}) {
      throw InvalidInput("attack '" + std::string(attack.name()) + "' must prepare exactly one EveAncilla qubit");
    }
    global = tensor_product(global, *ancilla);
    if (observer) (*observer)("attach ancilla", global, std::nullopt);
  }

  std::vector<int> eve_memory;
  {
    ChannelView view(global, ensemble, ChannelPhase::Qubit1InFlight, {QubitId::Qubit1, QubitId::EveAncilla}, eve_memory,
                     observer);
    attack.on_qubit1(view, rng);
  }
  // Qubit1Delivered: Bob holds Qubit1 before Qubit2 enters the channel.
  EveKnowledge knowledge = EveKnowledge::none();
  {
    ChannelView view(global, ensemble, ChannelPhase::Qubit2InFlight, {QubitId::Qubit2, QubitId::EveAncilla}, eve_memory,
                     observer);
    knowledge = attack.on_qubit2(view, rng);
  }
  check_knowledge(knowledge, ensemble);

  // BothDelivered.
  DensityMatrix bob_state = global.contains(QubitId::EveAncilla)
                                ? reduced_density(global, {QubitId::Qubit1, QubitId::Qubit2})
                                : density_of(global);
  const double fidelity = fidelity_to(bob_state, encoded);
  const KeySymbol bob_symbol = bob_decode(bob_state, ensemble, rng);

  return RoundTranscript{symbol,          bob_symbol, knowledge, fidelity, kChannelQubits, 0, std::move(bob_state),
                         std::move(global)};
}

}  // namespace qkdsim
