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

// qkdsim: simulate / mor-check / attack-demo.
//
// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 internal invariant
// violation.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qkdsim/errors.hpp"
#include "qkdsim/harness.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

void emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    qkdsim::write_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact simulator for an orthogonal-state QKD protocol and its double-CNOT eavesdropper"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "text"};

  // simulate
  auto *sim = app.add_subcommand("simulate", "Seeded Monte-Carlo run of many protocol rounds");
  std::uint64_t rounds = 10000;
  std::uint64_t seed = 0;
  std::string attack = "none";
  std::string ensemble = "cabello";
  std::optional<double> sim_alpha, sim_beta;
  std::string sim_format = "json";
  std::string sim_out;
  unsigned threads = 0;
  sim->add_option("--rounds", rounds, "Number of rounds")->capture_default_str()->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "Master seed")->capture_default_str();
  sim->add_option("--attack", attack, "none | double-cnot | intercept-resend")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "double-cnot", "intercept-resend"}));
  sim->add_option("--ensemble", ensemble, "cabello | nonmax")
      ->capture_default_str()
      ->check(CLI::IsMember({"cabello", "nonmax"}));
  sim->add_option("--alpha", sim_alpha, "psi angle in radians (nonmax)");
  sim->add_option("--beta", sim_beta, "phi angle in radians (nonmax)");
  sim->add_option("--format", sim_format, "json | csv | text")->capture_default_str()->check(CLI::IsMember(formats));
  sim->add_option("--out", sim_out, "Write the report here instead of stdout");
  sim->add_option("--threads", threads, "Worker threads (0 = all cores); never changes results")->capture_default_str();

  // mor-check
  auto *mor = app.add_subcommand("mor-check", "No-cloning audit of a non-maximally entangled pair");
  double mor_alpha = 0.0, mor_beta = 0.0;
  std::string mor_format = "json";
  std::string mor_out;
  mor->add_option("--alpha", mor_alpha, "psi angle in radians")->required();
  mor->add_option("--beta", mor_beta, "phi angle in radians")->required();
  mor->add_option("--format", mor_format, "json | csv | text")->capture_default_str()->check(CLI::IsMember(formats));
  mor->add_option("--out", mor_out, "Write the report here instead of stdout");

  // attack-demo
  auto *demo = app.add_subcommand("attack-demo", "Step-by-step trace of one four-state round");
  int symbol = 0;
  std::string demo_attack = "double-cnot";
  std::uint64_t demo_seed = 0;
  std::string demo_format = "text";
  std::string demo_out;
  demo->add_option("--symbol", symbol, "Alice's symbol 0..3")->required()->check(CLI::Range(0, 3));
  demo->add_option("--attack", demo_attack, "none | double-cnot | intercept-resend")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "double-cnot", "intercept-resend"}));
  demo->add_option("--seed", demo_seed, "Seed for measurement outcomes")->capture_default_str();
  demo->add_option("--format", demo_format, "json | csv | text")->capture_default_str()->check(CLI::IsMember(formats));
  demo->add_option("--out", demo_out, "Write the trace here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sim) {
      qkdsim::SimulationConfig config;
      config.rounds = rounds;
      config.seed = seed;
      config.attack_name = attack;
      config.output_format = qkdsim::parse_output_format(sim_format);
      config.threads = threads;
      if (!sim_out.empty()) config.output_path = sim_out;
      if (ensemble == "nonmax") {
        if (!sim_alpha || !sim_beta) throw qkdsim::InvalidInput("--ensemble nonmax needs --alpha and --beta");
        config.ensemble = {qkdsim::EnsembleKind::NonMax, *sim_alpha, *sim_beta};
      } else if (sim_alpha || sim_beta) {
        throw qkdsim::InvalidInput("--alpha/--beta only apply to --ensemble nonmax");
      }
      const auto report = qkdsim::simulate(config);
      emit(qkdsim::render(qkdsim::to_json(report), config.output_format), sim_out);
    } else if (*mor) {
      const auto format = qkdsim::parse_output_format(mor_format);
      emit(qkdsim::render(qkdsim::to_json(qkdsim::mor_check_cmd(mor_alpha, mor_beta)), format), mor_out);
    } else if (*demo) {
      const auto format = qkdsim::parse_output_format(demo_format);
      const auto trace = qkdsim::attack_demo(qkdsim::KeySymbol(symbol), demo_attack, demo_seed);
      emit(format == qkdsim::OutputFormat::Text ? qkdsim::render_trace_text(trace)
                                                : qkdsim::render(qkdsim::to_json(trace), format),
           demo_out);
    }
  } catch (const qkdsim::InvalidInput &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qkdsim::IoError &e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
