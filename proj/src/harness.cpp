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

#include "qkdsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "qkdsim/errors.hpp"
#include "qkdsim/format.hpp"
#include "qkdsim/round.hpp"

namespace qkdsim {

namespace {

constexpr std::uint64_t kChunkRounds = 4096;

struct ChunkTally {
  std::vector<std::uint64_t> symbol_counts;
  std::uint64_t bob_errors = 0;
  double fidelity_sum = 0.0;
  std::uint64_t exact = 0;
  std::uint64_t partition = 0;
  std::uint64_t violations = 0;
  std::uint64_t qubits = 0;
  std::uint64_t classical_bits = 0;
  std::map<std::pair<int, int>, std::uint64_t> joint;
};

ChunkTally run_chunk(const SimulationConfig &config, const StateEnsemble &ensemble, const AttackStrategy &attack,
                     std::uint64_t begin, std::uint64_t end) {
  ChunkTally t;
  t.symbol_counts.assign(ensemble.size(), 0);
  const std::vector<double> uniform(ensemble.size(), 1.0 / static_cast<double>(ensemble.size()));
  for (std::uint64_t r = begin; r < end; ++r) {
    SeededStream rng(derive_round_seed(config.seed, r));
    const KeySymbol symbol(static_cast<int>(rng.choose(uniform)));
    const RoundTranscript tr = run_round(ensemble, attack, symbol, rng);

    ++t.symbol_counts[static_cast<std::size_t>(symbol.value())];
    if (tr.bob_symbol != symbol) ++t.bob_errors;
    t.fidelity_sum += tr.bob_fidelity;
    t.qubits += tr.qubits_used;
    t.classical_bits += tr.classical_bits_used;
    const EveKnowledge &k = tr.eve_knowledge;
    if (k.kind() == EveKnowledge::Kind::Exact) ++t.exact;
    if (k.kind() == EveKnowledge::Kind::Partition) ++t.partition;
    if (k.kind() != EveKnowledge::Kind::None && !k.admits(symbol)) ++t.violations;
    ++t.joint[{symbol.value(), k.code()}];
  }
  return t;
}

Json angle_or_null(const EnsembleSpec &spec, double value) {
  return spec.kind == EnsembleKind::NonMax ? Json(value) : Json(nullptr);
}

Json state_json(const StateVector &s) {
  Json order = Json::array();
  for (QubitId q : s.qubit_order()) order.push_back(std::string(to_string(q)));
  Json amps = Json::array();
  for (const Amplitude &a : s.amplitudes()) amps.push_back(Json::array({a.real(), a.imag()}));
  return Json{{"qubit_order", order}, {"ket", to_ket_string(s)}, {"amplitudes", amps}};
}

}  // namespace

StateEnsemble EnsembleSpec::build() const {
  return kind == EnsembleKind::Cabello ? StateEnsemble::cabello() : StateEnsemble::nonmax(alpha, beta);
}

void SimulationConfig::validate() const {
  if (rounds < 1) throw InvalidInput("rounds must be at least 1");
  const auto &names = attack_names();
  if (std::find(names.begin(), names.end(), attack_name) == names.end()) {
    throw InvalidInput("unknown attack '" + attack_name + "' (expected none, double-cnot or intercept-resend)");
  }
  if (ensemble.kind == EnsembleKind::NonMax) {
    validate_nonmax_angles(ensemble.alpha, ensemble.beta);
    if (attack_name == "intercept-resend") throw InvalidInput("intercept-resend requires the cabello ensemble");
  }
}

SimulationReport simulate(const SimulationConfig &config) {
  const auto started = std::chrono::steady_clock::now();
  config.validate();
  const StateEnsemble ensemble = config.ensemble.build();
  const auto attack = make_attack(config.attack_name);

  const std::uint64_t chunks = (config.rounds + kChunkRounds - 1) / kChunkRounds;
  std::vector<ChunkTally> tallies(chunks);
  unsigned workers = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      try {
        const std::uint64_t begin = c * kChunkRounds;
        tallies[c] = run_chunk(config, ensemble, *attack, begin, std::min(config.rounds, begin + kChunkRounds));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  // Merge in chunk order.
  ChunkTally total;
  total.symbol_counts.assign(ensemble.size(), 0);
  for (const ChunkTally &t : tallies) {
    for (std::size_t i = 0; i < ensemble.size(); ++i) total.symbol_counts[i] += t.symbol_counts[i];
    total.bob_errors += t.bob_errors;
    total.fidelity_sum += t.fidelity_sum;
    total.exact += t.exact;
    total.partition += t.partition;
    total.violations += t.violations;
    total.qubits += t.qubits;
    total.classical_bits += t.classical_bits;
    for (const auto &[key, n] : t.joint) total.joint[key] += n;
  }

  const auto n = static_cast<double>(config.rounds);
  SimulationReport report;
  report.config = config;
  report.per_symbol_counts = total.symbol_counts;
  report.bob_error_rate = static_cast<double>(total.bob_errors) / n;
  report.mean_bob_fidelity = total.fidelity_sum / n;
  report.eve_exact_fraction = static_cast<double>(total.exact) / n;
  report.eve_partition_fraction = static_cast<double>(total.partition) / n;
  JointTable joint;
  for (const auto &[key, count] : total.joint) joint[key] = static_cast<double>(count);
  report.empirical_mutual_information_bits = mutual_information_bits(joint);
  report.analytic_mutual_information_bits = eve_mutual_information(ensemble, *attack);
  const std::uint64_t secret_bits = static_cast<std::uint64_t>(ensemble.bits_per_symbol()) * config.rounds;
  report.efficiency = efficiency(secret_bits, total.qubits, total.classical_bits);
  report.knowledge_soundness_violations = total.violations;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

Json to_json(const SimulationReport &report, bool include_elapsed) {
  const SimulationConfig &c = report.config;
  Json config{{"rounds", c.rounds},
              {"seed", c.seed},
              {"attack", c.attack_name},
              {"ensemble", c.ensemble.kind == EnsembleKind::Cabello ? "cabello" : "nonmax"},
              {"alpha", angle_or_null(c.ensemble, c.ensemble.alpha)},
              {"beta", angle_or_null(c.ensemble, c.ensemble.beta)},
              {"output_format", std::string(to_string(c.output_format))},
              {"output_path", c.output_path ? Json(*c.output_path) : Json(nullptr)},
              {"stream_split", std::string(round_seed_scheme())}};
  Json doc{{"config", config},
           {"per_symbol_counts", report.per_symbol_counts},
           {"bob_error_rate", report.bob_error_rate},
           {"mean_bob_fidelity", report.mean_bob_fidelity},
           {"eve_exact_fraction", report.eve_exact_fraction},
           {"eve_partition_fraction", report.eve_partition_fraction},
           {"empirical_mutual_information_bits", report.empirical_mutual_information_bits},
           {"analytic_mutual_information_bits", report.analytic_mutual_information_bits},
           {"efficiency", report.efficiency},
           {"knowledge_soundness_violations", report.knowledge_soundness_violations}};
  if (include_elapsed) doc["elapsed_ms"] = report.elapsed_ms;
  return doc;
}

MorCheckResult mor_check_cmd(double alpha, double beta) {
  const auto [psi, phi] = make_nonmax_pair(alpha, beta);
  MorCheckResult out{alpha, beta, mor_check(psi, phi), {}, false};
  out.attack = audit_attack(StateEnsemble::nonmax(alpha, beta), *double_cnot_attack());
  out.attack_distinguishes = distinguishes_undetectably(out.attack);
  return out;
}

Json to_json(const MorCheckResult &r) {
  return Json{{"alpha", r.alpha},
              {"beta", r.beta},
              {"rho1_orthogonal", r.report.rho1_orthogonal},
              {"rho1_identical", r.report.rho1_identical},
              {"rho2_orthogonal", r.report.rho2_orthogonal},
              {"criterion_satisfied", r.report.criterion_satisfied},
              {"witnesses",
               {{"tr_rho1_product", r.report.witnesses.tr_rho1_product},
                {"rho1_distance", r.report.witnesses.rho1_distance},
                {"tr_rho2_product", r.report.witnesses.tr_rho2_product}}},
              {"attack_distinguishes", r.attack_distinguishes},
              {"attack",
               {{"name", "double-cnot"},
                {"eve_exact_correct", r.attack.eve_exact_correct},
                {"min_bob_fidelity", r.attack.min_bob_fidelity},
                {"bob_error_probability", r.attack.bob_error_probability},
                {"mutual_information_bits", r.attack.mutual_information_bits}}}};
}

AttackTrace attack_demo(KeySymbol symbol, const std::string &attack_name, std::uint64_t seed) {
  const StateEnsemble ensemble = StateEnsemble::cabello();
  const auto attack = make_attack(attack_name);
  std::vector<TraceStep> steps;
  const RoundObserver observer = [&](const std::string &step, const StateVector &state, std::optional<int> outcome) {
    steps.push_back(TraceStep{step, state, outcome});
  };
  SeededStream rng(seed);
  const RoundTranscript tr = run_round(ensemble, *attack, symbol, rng, &observer);
  return AttackTrace{attack_name, symbol, std::move(steps), tr.eve_knowledge, tr.bob_symbol, tr.bob_fidelity};
}

Json to_json(const AttackTrace &trace) {
  Json steps = Json::array();
  for (const TraceStep &s : trace.steps) {
    Json step{{"step", s.step}};
    step["outcome"] = s.outcome ? Json(*s.outcome) : Json(nullptr);
    step["state"] = state_json(s.state);
    steps.push_back(std::move(step));
  }
  return Json{{"attack", trace.attack},
              {"symbol", trace.symbol.value()},
              {"steps", steps},
              {"eve_knowledge", trace.knowledge.to_string()},
              {"bob_symbol", trace.bob_symbol.value()},
              {"bob_fidelity", trace.bob_fidelity}};
}

std::string render_trace_text(const AttackTrace &trace) {
  std::string out = "attack: " + trace.attack + "\nsymbol: " + std::to_string(trace.symbol.value()) + "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep &s = trace.steps[i];
    std::string order;
    for (QubitId q : s.state.qubit_order()) order += (order.empty() ? "" : ",") + std::string(to_string(q));
    out += "[" + std::to_string(i + 1) + "] " + s.step;
    if (s.outcome) out += " => " + std::to_string(*s.outcome);
    out += "\n    " + to_ket_string(s.state) + "  (" + order + ")\n";
  }
  out += "eve_knowledge: " + trace.knowledge.to_string() + "\n";
  out += "bob_symbol: " + std::to_string(trace.bob_symbol.value()) + "\n";
  out += "bob_fidelity: " + format_real(trace.bob_fidelity) + "\n";
  return out;
}

}  // namespace qkdsim
