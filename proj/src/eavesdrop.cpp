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

#include "qkdsim/eavesdrop.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "qkdsim/errors.hpp"

namespace qkdsim {

EveKnowledge EveKnowledge::exact(KeySymbol symbol) {
  return EveKnowledge(Kind::Exact, static_cast<std::uint8_t>(1U << symbol.value()));
}

EveKnowledge EveKnowledge::partition(std::initializer_list<int> symbols) {
  std::uint8_t mask = 0;
  for (int s : symbols) mask |= static_cast<std::uint8_t>(1U << KeySymbol(s).value());
  if (std::popcount(mask) < 2) throw InvalidInput("a partition claim needs at least two candidate symbols");
  return EveKnowledge(Kind::Partition, mask);
}

KeySymbol EveKnowledge::symbol() const {
  if (kind_ != Kind::Exact) throw InvalidInput("knowledge " + to_string() + " does not name a single symbol");
  return KeySymbol(std::countr_zero(mask_));
}

std::string EveKnowledge::to_string() const {
  switch (kind_) {
    case Kind::None:
      return "none";
    case Kind::Exact:
      return "exact:" + std::to_string(std::countr_zero(mask_));
    case Kind::Partition: {
      std::string out = "partition:{";
      bool first = true;
      for (int s = 0; s < 4; ++s) {
        if ((mask_ >> s) & 1U) {
          if (!first) out += ",";
          out += std::to_string(s);
          first = false;
        }
      }
      return out + "}";
    }
  }
  return "?";
}

ChannelView::ChannelView(StateVector &global, const StateEnsemble &ensemble, ChannelPhase phase,
                         std::vector<QubitId> accessible, std::vector<int> &eve_memory, const RoundObserver *observer)
    : global_(global),
      ensemble_(ensemble),
      phase_(phase),
      accessible_(std::move(accessible)),
      memory_(eve_memory),
      observer_(observer) {}

bool ChannelView::can_access(QubitId q) const {
  return global_.contains(q) && std::find(accessible_.begin(), accessible_.end(), q) != accessible_.end();
}

void ChannelView::require(QubitId q) const {
  if (!can_access(q)) {
    throw PhaseViolation("attack touched " + std::string(qkdsim::to_string(q)) + " during phase " +
                         std::string(qkdsim::to_string(phase_)));
  }
}

void ChannelView::cnot(QubitId control, QubitId target) {
  require(control);
  require(target);
  global_ = apply_cnot(global_, control, target);
  if (observer_) {
    (*observer_)("cnot " + std::string(qkdsim::to_string(control)) + " -> " + std::string(qkdsim::to_string(target)),
                 global_, std::nullopt);
  }
}

int ChannelView::measure(QubitId q, RandomStream &rng) {
  require(q);
  MeasurementOutcome m = measure_qubit(global_, q, rng);
  global_ = std::move(m.post_state);
  if (observer_) (*observer_)("measure " + std::string(qkdsim::to_string(q)), global_, m.result);
  return m.result;
}

std::array<double, 2> ChannelView::probabilities(QubitId q) const {
  require(q);
  return qubit_probabilities(global_, q);
}

namespace {

class NoAttack final : public AttackStrategy {
 public:
  std::string_view name() const override { return "none"; }
  std::optional<StateVector> prepare() const override { return std::nullopt; }
  void on_qubit1(ChannelView &, RandomStream &) const override {}
  EveKnowledge on_qubit2(ChannelView &, RandomStream &) const override { return EveKnowledge::none(); }
};

class DoubleCnotAttack final : public AttackStrategy {
 public:
  std::string_view name() const override { return "double-cnot"; }

  std::optional<StateVector> prepare() const override { return StateVector::basis({QubitId::EveAncilla}, 0); }

  void on_qubit1(ChannelView &view, RandomStream &) const override { view.cnot(QubitId::Qubit1, QubitId::EveAncilla); }

  EveKnowledge on_qubit2(ChannelView &view, RandomStream &rng) const override {
    view.cnot(QubitId::Qubit2, QubitId::EveAncilla);
    const int parity = view.measure(QubitId::EveAncilla, rng);
    if (view.ensemble().kind() == EnsembleKind::NonMax) {
      // psi(alpha) has odd parity, phi(beta) even; both cells are singletons.
      return EveKnowledge::exact(KeySymbol(parity == 1 ? 0 : 1));
    }
    if (parity == 1) return EveKnowledge::partition({1, 2});
    // Even parity leaves |00> or |11>, a product state: reading Qubit2
    // identifies it and the collapsed qubit is forwarded unchanged.
    const int q2 = view.measure(QubitId::Qubit2, rng);
    return EveKnowledge::exact(KeySymbol(q2 == 0 ? 0 : 3));
  }
};

class InterceptResendAttack final : public AttackStrategy {
 public:
  std::string_view name() const override { return "intercept-resend"; }

  bool supports(const StateEnsemble &ensemble) const override { return ensemble.kind() == EnsembleKind::Cabello; }

  std::optional<StateVector> prepare() const override { return std::nullopt; }

  void on_qubit1(ChannelView &view, RandomStream &rng) const override {
    view.memory().push_back(view.measure(QubitId::Qubit1, rng));
  }

  EveKnowledge on_qubit2(ChannelView &view, RandomStream &rng) const override {
    if (view.memory().size() != 1) throw InvariantViolation("intercept-resend: missing the Qubit1 reading");
    const int q1 = view.memory().front();
    const int q2 = view.measure(QubitId::Qubit2, rng);
    if (q1 == 0 && q2 == 0) return EveKnowledge::exact(KeySymbol(0));
    if (q1 == 1 && q2 == 1) return EveKnowledge::exact(KeySymbol(3));
    constexpr std::array<double, 2> kFair{0.5, 0.5};
    return EveKnowledge::exact(KeySymbol(rng.choose(kFair) == 0 ? 1 : 2));
  }
};

}  // namespace

std::unique_ptr<AttackStrategy> double_cnot_attack() { return std::make_unique<DoubleCnotAttack>(); }
std::unique_ptr<AttackStrategy> no_attack() { return std::make_unique<NoAttack>(); }
std::unique_ptr<AttackStrategy> intercept_resend_attack() { return std::make_unique<InterceptResendAttack>(); }

const std::vector<std::string_view> &attack_names() {
  static const std::vector<std::string_view> names{"none", "double-cnot", "intercept-resend"};
  return names;
}

std::unique_ptr<AttackStrategy> make_attack(std::string_view name) {
  if (name == "none") return no_attack();
  if (name == "double-cnot") return double_cnot_attack();
  if (name == "intercept-resend") return intercept_resend_attack();
  throw InvalidInput("unknown attack '" + std::string(name) + "' (expected none, double-cnot or intercept-resend)");
}

}  // namespace qkdsim
