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

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qkdsim/protocol.hpp"
#include "qkdsim/quantum.hpp"
#include "qkdsim/random.hpp"

namespace qkdsim {

/// What Eve claims to know about Alice's symbol after a round.
class EveKnowledge {
 public:
  enum class Kind : std::uint8_t { None, Partition, Exact };

  static EveKnowledge none() { return EveKnowledge(Kind::None, 0); }
  static EveKnowledge exact(KeySymbol symbol);
  /// A set of two or more candidate symbols.
  static EveKnowledge partition(std::initializer_list<int> symbols);

  Kind kind() const { return kind_; }
  /// Candidate symbols as a bitmask (bit i set when symbol i is possible).
  std::uint8_t candidates() const { return mask_; }
  bool admits(KeySymbol symbol) const { return (mask_ >> symbol.value()) & 1U; }
  /// Symbol of an Exact claim.
  KeySymbol symbol() const;

  /// Stable integer code, distinct for every distinct claim.
  int code() const { return static_cast<int>(kind_) * 16 + mask_; }

  /// "none", "exact:3", "partition:{1,2}".
  std::string to_string() const;

  auto operator<=>(const EveKnowledge &) const = default;

 private:
  EveKnowledge(Kind kind, std::uint8_t mask) : kind_(kind), mask_(mask) {}

  Kind kind_;
  std::uint8_t mask_;
};

/// Called after every step that changes the round's global state, with a
/// short description, the new state, and the measurement result if any.
using RoundObserver = std::function<void(const std::string &step, const StateVector &state, std::optional<int> outcome)>;

/// Restricted handle on the global round state given to an attack hook.
/// Any operation on a qubit outside the view throws PhaseViolation naming
/// the phase; the rest of the state is unreachable through this interface.
class ChannelView {
 public:
  ChannelView(StateVector &global, const StateEnsemble &ensemble, ChannelPhase phase, std::vector<QubitId> accessible,
              std::vector<int> &eve_memory, const RoundObserver *observer = nullptr);

  ChannelPhase phase() const { return phase_; }
  /// Public protocol parameters (which alphabet is in use).
  const StateEnsemble &ensemble() const { return ensemble_; }
  const std::vector<QubitId> &accessible() const { return accessible_; }
  bool can_access(QubitId q) const;

  void cnot(QubitId control, QubitId target);
  /// Computational-basis measurement; the collapsed state stays in the channel.
  int measure(QubitId q, RandomStream &rng);
  /// Outcome probabilities for `q` as Eve's apparatus would see them.
  std::array<double, 2> probabilities(QubitId q) const;

  /// Classical notes Eve carries from the first hook to the second within
  /// one round.
  std::vector<int> &memory() { return memory_; }

 private:
  void require(QubitId q) const;

  StateVector &global_;
  const StateEnsemble &ensemble_;
  ChannelPhase phase_;
  std::vector<QubitId> accessible_;
  std::vector<int> &memory_;
  const RoundObserver *observer_;
};

/// Eavesdropping strategy. Strategies are stateless; everything specific to
/// one round lives in the channel state, Eve's memory vector, and the
/// round's random stream.
class AttackStrategy {
 public:
  virtual ~AttackStrategy() = default;

  virtual std::string_view name() const = 0;
  virtual bool supports(const StateEnsemble &ensemble) const { return ensemble.size() >= 1; }

  /// Eve's ancilla over {EveAncilla}, or nothing if she uses none.
  virtual std::optional<StateVector> prepare() const = 0;
  /// Runs while Qubit1 is in flight; the view covers Qubit1 and the ancilla.
  virtual void on_qubit1(ChannelView &view, RandomStream &rng) const = 0;
  /// Runs while Qubit2 is in flight; the view covers Qubit2 and the ancilla.
  virtual EveKnowledge on_qubit2(ChannelView &view, RandomStream &rng) const = 0;
};

/// Ancilla |0>_e; CNOT(Qubit1 -> e) on the first pass, CNOT(Qubit2 -> e) on
/// the second, then read e. The ancilla then holds the parity of the two
/// channel qubits, which is 0 for |00>,|11> and 1 for the entangled pair.
/// On the four-state alphabet an ancilla reading 0 is followed by a
/// Qubit2 measurement that separates psi0 from psi3.
std::unique_ptr<AttackStrategy> double_cnot_attack();
std::unique_ptr<AttackStrategy> no_attack();
/// Computational-basis measurement of each qubit as it passes. Four-state
/// alphabet only.
std::unique_ptr<AttackStrategy> intercept_resend_attack();

/// "none", "double-cnot", "intercept-resend".
std::unique_ptr<AttackStrategy> make_attack(std::string_view name);
const std::vector<std::string_view> &attack_names();

}  // namespace qkdsim
