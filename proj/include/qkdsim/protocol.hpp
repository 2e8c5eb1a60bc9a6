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

// Signal alphabets for the orthogonal-state key distribution protocol.
//
// The four-state alphabet sends two key bits per round as one of
//   psi0 = |00>, psi1 = (|10> + |01>)/sqrt2, psi2 = (|10> - |01>)/sqrt2, psi3 = |11>
// over (Qubit1, Qubit2). The two-state alphabet uses the non-maximally
// entangled pair psi(a) = cos a|01> + sin a|10>, phi(b) = cos b|00> + sin b|11>.

#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "qkdsim/quantum.hpp"

namespace qkdsim {

/// Index of the transmitted signal state; 0..3.
class KeySymbol {
 public:
  explicit KeySymbol(int value);
  int value() const { return value_; }
  auto operator<=>(const KeySymbol &) const = default;

 private:
  int value_;
};

enum class EnsembleKind { Cabello, NonMax };

/// Slack applied to each strict inequality of the two-state parameter domain.
inline constexpr double kAngleSlack = 1e-9;

/// Throws InvalidInput naming the first violated condition of
/// 0 < alpha, beta < pi/2, alpha != beta, alpha != pi/4, beta != pi/4.
void validate_nonmax_angles(double alpha, double beta);

/// psi(alpha) = cos a|01> + sin a|10> and phi(beta) = cos b|00> + sin b|11>.
std::pair<StateVector, StateVector> nonmax_states(double alpha, double beta);

class StateEnsemble {
 public:
  static StateEnsemble cabello();
  static StateEnsemble nonmax(double alpha, double beta);

  EnsembleKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<StateVector> &states() const { return states_; }
  /// Key bits carried by one symbol: log2(size).
  int bits_per_symbol() const { return kind_ == EnsembleKind::Cabello ? 2 : 1; }
  std::string_view name() const { return kind_ == EnsembleKind::Cabello ? "cabello" : "nonmax"; }

 private:
  StateEnsemble(EnsembleKind kind, double alpha, double beta, std::vector<StateVector> states);

  EnsembleKind kind_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  std::vector<StateVector> states_;
};

/// The two-qubit channel state Alice prepares for `symbol`.
StateVector encode(const StateEnsemble &ensemble, KeySymbol symbol);

/// Secret bits per transmitted resource: b_s / (q_t + b_t).
double efficiency(std::uint64_t secret_bits, std::uint64_t qubits, std::uint64_t classical_bits);

/// Where the two channel qubits are. Phases only advance in this order;
/// Qubit2 is not released to the channel before Qubit1 has been delivered.
enum class ChannelPhase { Qubit1InFlight, Qubit1Delivered, Qubit2InFlight, BothDelivered };

std::string_view to_string(ChannelPhase phase);

}  // namespace qkdsim
