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

// Exact (branch-enumerated) analysis of attacks, and plug-in mutual
// information over discrete joint tables.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qkdsim/eavesdrop.hpp"
#include "qkdsim/protocol.hpp"
#include "qkdsim/random.hpp"
#include "qkdsim/round.hpp"

namespace qkdsim {

/// Weight (probability or count) of each (x, y) pair. Weights need not be
/// normalized.
using JointTable = std::map<std::pair<int, int>, double>;

/// I(X;Y) in bits of the normalized table. Empty or all-zero tables give 0.
double mutual_information_bits(const JointTable &joint);

/// Every outcome of one round for a fixed symbol, with its exact probability.
std::vector<Branch<RoundTranscript>> enumerate_round(const StateEnsemble &ensemble, const AttackStrategy &attack,
                                                     KeySymbol symbol);

/// Joint distribution of (Alice's symbol, Eve's knowledge code) with
/// uniformly drawn symbols.
JointTable alice_eve_distribution(const StateEnsemble &ensemble, const AttackStrategy &attack);

/// I(Alice; Eve) in bits, computed by exhaustive enumeration.
double eve_mutual_information(const StateEnsemble &ensemble, const AttackStrategy &attack);

/// Exhaustive per-attack statistics; probabilities are averaged over a
/// uniform symbol.
struct AttackAudit {
  double mutual_information_bits = 0.0;
  double eve_exact_probability = 0.0;
  double eve_partition_probability = 0.0;
  /// Probability of an Exact claim that names the wrong symbol, or a
  /// Partition that excludes the right one.
  double soundness_violation_probability = 0.0;
  double bob_error_probability = 0.0;
  double min_bob_fidelity = 1.0;
  /// bob_distribution[i][j] = Pr(Bob decodes j | Alice sent i).
  std::vector<std::vector<double>> bob_distribution;
  /// Pr(Eve's claim is Exact and correct | Alice sent i).
  std::vector<double> eve_exact_correct;
};

AttackAudit audit_attack(const StateEnsemble &ensemble, const AttackStrategy &attack);

/// Eve names every symbol correctly with probability 1 while Bob's
/// delivered state is untouched, both within `tol`.
bool distinguishes_undetectably(const AttackAudit &audit, double tol = 1e-12);

}  // namespace qkdsim
