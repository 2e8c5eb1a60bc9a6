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

// Drivers behind the command-line tool: seeded Monte-Carlo runs, the
// no-cloning audit for a two-state alphabet, and step-by-step attack traces.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qkdsim/information.hpp"
#include "qkdsim/mor.hpp"
#include "qkdsim/protocol.hpp"
#include "qkdsim/report.hpp"

namespace qkdsim {

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Cabello;
  double alpha = 0.0;
  double beta = 0.0;

  StateEnsemble build() const;
};

struct SimulationConfig {
  std::uint64_t rounds = 10000;
  std::uint64_t seed = 0;
  std::string attack_name = "none";
  EnsembleSpec ensemble;
  OutputFormat output_format = OutputFormat::Json;
  std::optional<std::string> output_path;
  /// Worker threads; 0 means one per hardware thread. Results do not
  /// depend on this value.
  unsigned threads = 1;

  /// Throws InvalidInput describing the first problem found.
  void validate() const;
};

struct SimulationReport {
  SimulationConfig config;
  /// How often Alice drew each symbol.
  std::vector<std::uint64_t> per_symbol_counts;
  double bob_error_rate = 0.0;
  double mean_bob_fidelity = 0.0;
  double eve_exact_fraction = 0.0;
  double eve_partition_fraction = 0.0;
  double empirical_mutual_information_bits = 0.0;
  double analytic_mutual_information_bits = 0.0;
  double efficiency = 0.0;
  /// Rounds where Eve's claim excluded Alice's actual symbol.
  std::uint64_t knowledge_soundness_violations = 0;
  double elapsed_ms = 0.0;
};

/// Rounds are split into fixed-size chunks that may run on any thread;
/// round r always uses the stream seeded by derive_round_seed(seed, r) and
/// chunk partials are merged in chunk order, so the report is
/// bit-identical for any thread count.
SimulationReport simulate(const SimulationConfig &config);

Json to_json(const SimulationReport &report, bool include_elapsed = true);

struct MorCheckResult {
  double alpha;
  double beta;
  MorReport report;
  AttackAudit attack;
  bool attack_distinguishes;
};

/// No-cloning audit of the (psi(alpha), phi(beta)) pair plus the exact
/// double-CNOT audit of the same alphabet.
MorCheckResult mor_check_cmd(double alpha, double beta);

Json to_json(const MorCheckResult &result);

struct TraceStep {
  std::string step;
  StateVector state;
  std::optional<int> outcome;
};

struct AttackTrace {
  std::string attack;
  KeySymbol symbol;
  std::vector<TraceStep> steps;
  EveKnowledge knowledge;
  KeySymbol bob_symbol;
  double bob_fidelity;
};

/// One four-state round with every intermediate global state recorded.
AttackTrace attack_demo(KeySymbol symbol, const std::string &attack_name = "double-cnot", std::uint64_t seed = 0);

Json to_json(const AttackTrace &trace);
/// Human-readable trace: one line per step in ket notation.
std::string render_trace_text(const AttackTrace &trace);

}  // namespace qkdsim
