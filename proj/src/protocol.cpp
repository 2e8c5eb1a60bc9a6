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

#include "qkdsim/protocol.hpp"

#include <cmath>
#include <numbers>

#include "qkdsim/errors.hpp"
#include "qkdsim/format.hpp"

namespace qkdsim {

namespace {

const std::vector<QubitId> kChannel{QubitId::Qubit1, QubitId::Qubit2};

StateVector channel_state(double a00, double a01, double a10, double a11) {
  return StateVector(kChannel, {a00, a01, a10, a11});
}

}  // namespace

KeySymbol::KeySymbol(int value) : value_(value) {
  if (value < 0 || value > 3) throw InvalidInput("key symbol " + std::to_string(value) + " outside 0..3");
}

void validate_nonmax_angles(double alpha, double beta) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  constexpr double kQuarterPi = std::numbers::pi / 4;
  if (!std::isfinite(alpha) || !std::isfinite(beta)) throw InvalidInput("alpha and beta must be finite");
  if (!(alpha > kAngleSlack)) throw InvalidInput("alpha must satisfy 0 < alpha (got " + format_real(alpha) + ")");
  if (!(alpha < kHalfPi - kAngleSlack)) throw InvalidInput("alpha must satisfy alpha < pi/2 (got " + format_real(alpha) + ")");
  if (!(beta > kAngleSlack)) throw InvalidInput("beta must satisfy 0 < beta (got " + format_real(beta) + ")");
  if (!(beta < kHalfPi - kAngleSlack)) throw InvalidInput("beta must satisfy beta < pi/2 (got " + format_real(beta) + ")");
  if (std::abs(alpha - beta) <= kAngleSlack) throw InvalidInput("alpha must differ from beta (got " + format_real(alpha) + ")");
  if (std::abs(alpha - kQuarterPi) <= kAngleSlack) throw InvalidInput("alpha must differ from pi/4");
  if (std::abs(beta - kQuarterPi) <= kAngleSlack) throw InvalidInput("beta must differ from pi/4");
}

std::pair<StateVector, StateVector> nonmax_states(double alpha, double beta) {
  validate_nonmax_angles(alpha, beta);
  return {channel_state(0.0, std::cos(alpha), std::sin(alpha), 0.0),
          channel_state(std::cos(beta), 0.0, 0.0, std::sin(beta))};
}

StateEnsemble::StateEnsemble(EnsembleKind kind, double alpha, double beta, std::vector<StateVector> states)
    : kind_(kind), alpha_(alpha), beta_(beta), states_(std::move(states)) {}

StateEnsemble StateEnsemble::cabello() {
  const double h = 1.0 / std::numbers::sqrt2;
  return StateEnsemble(EnsembleKind::Cabello, 0.0, 0.0,
                       {channel_state(1, 0, 0, 0), channel_state(0, h, h, 0), channel_state(0, -h, h, 0),
                        channel_state(0, 0, 0, 1)});
}

StateEnsemble StateEnsemble::nonmax(double alpha, double beta) {
  auto [psi, phi] = nonmax_states(alpha, beta);
  return StateEnsemble(EnsembleKind::NonMax, alpha, beta, {std::move(psi), std::move(phi)});
}

StateVector encode(const StateEnsemble &ensemble, KeySymbol symbol) {
  const auto i = static_cast<std::size_t>(symbol.value());
  if (i >= ensemble.size()) {
    throw InvalidInput("symbol " + std::to_string(symbol.value()) + " is out of range for the " +
                       std::string(ensemble.name()) + " ensemble of " + std::to_string(ensemble.size()) + " states");
  }
  return ensemble.states()[i];
}

double efficiency(std::uint64_t secret_bits, std::uint64_t qubits, std::uint64_t classical_bits) {
  const std::uint64_t spent = qubits + classical_bits;
  if (spent == 0) throw InvalidInput("efficiency: no qubits or classical bits were used");
  return static_cast<double>(secret_bits) / static_cast<double>(spent);
}

std::string_view to_string(ChannelPhase phase) {
  switch (phase) {
    case ChannelPhase::Qubit1InFlight:
      return "Qubit1InFlight";
    case ChannelPhase::Qubit1Delivered:
      return "Qubit1Delivered";
    case ChannelPhase::Qubit2InFlight:
      return "Qubit2InFlight";
    case ChannelPhase::BothDelivered:
      return "BothDelivered";
  }
  return "?";
}

}  // namespace qkdsim
