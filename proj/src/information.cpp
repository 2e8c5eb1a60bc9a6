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

#include "qkdsim/information.hpp"

#include <algorithm>
#include <cmath>

namespace qkdsim {

double mutual_information_bits(const JointTable &joint) {
  double total = 0.0;
  std::map<int, double> px, py;
  for (const auto &[key, w] : joint) {
    total += w;
    px[key.first] += w;
    py[key.second] += w;
  }
  if (!(total > 0.0)) return 0.0;
  double mi = 0.0;
  for (const auto &[key, w] : joint) {
    if (!(w > 0.0)) continue;
    // p(x,y) log2( p(x,y) / (p(x) p(y)) ) with all terms unnormalized.
    mi += (w / total) * std::log2(w * total / (px[key.first] * py[key.second]));
  }
  return std::max(mi, 0.0);
}

std::vector<Branch<RoundTranscript>> enumerate_round(const StateEnsemble &ensemble, const AttackStrategy &attack,
                                                     KeySymbol symbol) {
  return enumerate_branches([&](RandomStream &rng) { return run_round(ensemble, attack, symbol, rng); });
}

JointTable alice_eve_distribution(const StateEnsemble &ensemble, const AttackStrategy &attack) {
  JointTable joint;
  const double prior = 1.0 / static_cast<double>(ensemble.size());
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const KeySymbol symbol(static_cast<int>(i));
    for (const auto &branch : enumerate_round(ensemble, attack, symbol)) {
      joint[{symbol.value(), branch.value.eve_knowledge.code()}] += prior * branch.probability;
    }
  }
  return joint;
}

double eve_mutual_information(const StateEnsemble &ensemble, const AttackStrategy &attack) {
  return mutual_information_bits(alice_eve_distribution(ensemble, attack));
}

AttackAudit audit_attack(const StateEnsemble &ensemble, const AttackStrategy &attack) {
  AttackAudit audit;
  const std::size_t n = ensemble.size();
  const double prior = 1.0 / static_cast<double>(n);
  audit.bob_distribution.assign(n, std::vector<double>(n, 0.0));
  audit.eve_exact_correct.assign(n, 0.0);
  JointTable joint;

  for (std::size_t i = 0; i < n; ++i) {
    const KeySymbol symbol(static_cast<int>(i));
    for (const auto &[p, t] : enumerate_round(ensemble, attack, symbol)) {
      joint[{symbol.value(), t.eve_knowledge.code()}] += prior * p;
      audit.bob_distribution[i][static_cast<std::size_t>(t.bob_symbol.value())] += p;
      if (t.bob_symbol != symbol) audit.bob_error_probability += prior * p;
      audit.min_bob_fidelity = std::min(audit.min_bob_fidelity, t.bob_fidelity);

      const EveKnowledge &k = t.eve_knowledge;
      if (k.kind() == EveKnowledge::Kind::Exact) {
        audit.eve_exact_probability += prior * p;
        if (k.symbol() == symbol) {
          audit.eve_exact_correct[i] += p;
        } else {
          audit.soundness_violation_probability += prior * p;
        }
      } else if (k.kind() == EveKnowledge::Kind::Partition) {
        audit.eve_partition_probability += prior * p;
        if (!k.admits(symbol)) audit.soundness_violation_probability += prior * p;
      }
    }
  }
  audit.mutual_information_bits = mutual_information_bits(joint);
  return audit;
}

bool distinguishes_undetectably(const AttackAudit &audit, double tol) {
  for (double p : audit.eve_exact_correct) {
    if (std::abs(p - 1.0) > tol) return false;
  }
  return audit.min_bob_fidelity >= 1.0 - tol && audit.bob_error_probability <= tol;
}

}  // namespace qkdsim
