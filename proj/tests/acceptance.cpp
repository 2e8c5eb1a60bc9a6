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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Reference values come from the oracles in oracles.hpp,
// never from the library under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "property_checks.hpp"
#include "qkdsim/harness.hpp"
#include "qkdsim/information.hpp"
#include "qkdsim/mor.hpp"
#include "qkdsim/protocol.hpp"
#include "qkdsim/round.hpp"
#include "test_util.hpp"

using namespace qkdsim;

namespace {

constexpr double kPi = std::numbers::pi;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// 1. Double-CNOT pipeline on |psi_i>|0>_e, against dense CNOT matrices.
Outcome criterion1() {
  Outcome o;
  o.detail.precision(3);
  const auto e = StateEnsemble::cabello();
  const auto refs = oracle::cabello_states();
  const oracle::Mat gates = oracle::cnot(3, 1, 2) * oracle::cnot(3, 0, 2);
  double worst = 0.0;
  double worst_ms = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto t0 = Clock::now();
    auto s = tensor_product(encode(e, KeySymbol(i)), StateVector::basis({QubitId::EveAncilla}, 0));
    s = apply_cnot(s, QubitId::Qubit1, QubitId::EveAncilla);
    s = apply_cnot(s, QubitId::Qubit2, QubitId::EveAncilla);
    worst_ms = std::max(worst_ms, ms_since(t0));

    const oracle::Vec flag = (i == 0 || i == 3) ? oracle::ket0() : oracle::ket1();
    const oracle::Vec expected = oracle::kron(refs[static_cast<std::size_t>(i)], flag);
    const oracle::Vec dense = gates * oracle::kron(refs[static_cast<std::size_t>(i)], oracle::ket0());
    const double err = std::max(testutil::max_abs_diff(testutil::to_eigen(s), expected), testutil::max_abs_diff(dense, expected));
    worst = std::max(worst, err);

    // The staged attack (phase-checked channel) passes through the same state.
    const auto trace = attack_demo(KeySymbol(i));
    worst = std::max(worst, testutil::max_abs_diff(testutil::to_eigen(trace.steps.at(3).state), expected));
  }
  o.detail << "max amplitude error " << worst << ", slowest pipeline " << worst_ms << " ms";
  o.require(worst <= 1e-12, "amplitude error <= 1e-12");
  o.require(worst_ms < 1.0, "< 1 ms");
  return o;
}

// 2. Exhaustive enumeration: Bob's statistics unchanged, fidelity 1.
Outcome criterion2() {
  Outcome o;
  const auto e = StateEnsemble::cabello();
  const auto attacked = double_cnot_attack();
  const auto clean = no_attack();
  double max_diff = 0.0, min_fid = 1.0;
  std::size_t branches = 0;
  for (int i = 0; i < 4; ++i) {
    std::vector<double> with(4, 0.0), without(4, 0.0);
    for (const auto &b : enumerate_round(e, *attacked, KeySymbol(i))) {
      with[static_cast<std::size_t>(b.value.bob_symbol.value())] += b.probability;
      min_fid = std::min(min_fid, b.value.bob_fidelity);
      ++branches;
    }
    for (const auto &b : enumerate_round(e, *clean, KeySymbol(i)))
      without[static_cast<std::size_t>(b.value.bob_symbol.value())] += b.probability;
    for (std::size_t j = 0; j < 4; ++j) {
      max_diff = std::max(max_diff, std::abs(with[j] - without[j]));
      // Without an attack Bob decodes exactly what was sent.
      o.require(without[j] == (static_cast<int>(j) == i ? 1.0 : 0.0), "no-attack decode is the identity");
    }
  }
  o.detail.precision(17);
  o.detail << branches << " branches, max |P_attack - P_clean| = " << max_diff << ", min fidelity " << min_fid;
  o.require(max_diff == 0.0, "identical decode distributions");
  o.require(std::abs(min_fid - 1.0) <= 1e-12, "fidelity 1 within 1e-12");
  return o;
}

// 3. Analytic 1.5 bits; sampled exact fraction 0.5 +- 0.015 for seeds 0..9.
Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  // Oracle: Eve's reading Y given Alice's X. Rows X=0..3, cols Y=exact0, exact3, partition{1,2}.
  const std::vector<std::vector<double>> joint{{0.25, 0, 0}, {0, 0, 0.25}, {0, 0, 0.25}, {0, 0.25, 0}};
  const double ref = oracle::mutual_information(joint);
  const double mi = eve_mutual_information(StateEnsemble::cabello(), *double_cnot_attack());
  o.require(std::abs(ref - 1.5) <= 1e-12, "oracle MI equals 1.5");
  o.require(std::abs(mi - 1.5) <= 1e-12, "MI = 1.5 within 1e-12");
  double lo = 1.0, hi = 0.0;
  std::uint64_t violations = 0;
  double slowest = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SimulationConfig c;
    c.rounds = 10000;
    c.seed = seed;
    c.attack_name = "double-cnot";
    const auto t = Clock::now();
    const auto r = simulate(c);
    slowest = std::max(slowest, ms_since(t));
    lo = std::min(lo, r.eve_exact_fraction);
    hi = std::max(hi, r.eve_exact_fraction);
    violations += r.knowledge_soundness_violations;
  }
  o.detail.precision(17);
  o.detail << "MI " << mi << " bits; exact fraction over seeds 0..9 in [" << lo << ", " << hi << "]; violations "
           << violations;
  o.detail.precision(3);
  o.detail << "; slowest run " << slowest << " ms";
  o.require(lo >= 0.5 - 0.015 && hi <= 0.5 + 0.015, "exact fraction within 0.5 +- 0.015");
  o.require(violations == 0, "zero soundness violations");
  o.require(slowest <= 5000.0 && ms_since(t0) <= 5000.0 * 10, "runtime <= 5 s per run");
  return o;
}

// 4. Efficiency: two qubits, no classical bits, two key bits per round.
Outcome criterion4() {
  Outcome o;
  const auto e = StateEnsemble::cabello();
  SeededStream rng(1);
  std::uint64_t q = 0, b = 0, key_bits = 0;
  for (int r = 0; r < 1000; ++r) {
    const auto t = run_round(e, *no_attack(), KeySymbol(r % 4), rng);
    q += t.qubits_used;
    b += t.classical_bits_used;
    key_bits += 2;
  }
  const double accounted = efficiency(key_bits, q, b);
  SimulationConfig c;
  c.rounds = 1000;
  c.attack_name = "double-cnot";
  const double reported = simulate(c).efficiency;
  o.detail.precision(17);
  o.detail << "q_t " << q << ", b_t " << b << ", b_s " << key_bits << ", E " << accounted << ", simulate E " << reported;
  o.require(b == 0 && key_bits == q, "b_t = 0, b_s = q_t");
  o.require(accounted == 1.0 && reported == 1.0, "E = 1.0 exactly");
  return o;
}

// 5. Mor criterion holds for the two-state example yet the attack succeeds.
Outcome criterion5() {
  Outcome o;
  const auto closed1 = [](double a, double b) {
    return std::pow(std::cos(a) * std::cos(b), 2) + std::pow(std::sin(a) * std::sin(b), 2);
  };
  const auto closed2 = [](double a, double b) {
    return std::pow(std::sin(a) * std::cos(b), 2) + std::pow(std::cos(a) * std::sin(b), 2);
  };
  const auto attack = double_cnot_attack();

  const auto [psi, phi] = make_nonmax_pair(kPi / 6, kPi / 3);
  const auto r = mor_check(psi, phi);
  o.require(r.criterion_satisfied, "criterion satisfied at (pi/6, pi/3)");
  o.require(std::abs(r.witnesses.tr_rho1_product - 0.375) <= 1e-10 &&
                std::abs(r.witnesses.tr_rho1_product - closed1(kPi / 6, kPi / 3)) <= 1e-10,
            "rho1 witness 0.375");
  o.require(std::abs(r.witnesses.tr_rho2_product - 0.625) <= 1e-10 &&
                std::abs(r.witnesses.tr_rho2_product - closed2(kPi / 6, kPi / 3)) <= 1e-10,
            "rho2 witness 0.625");
  const auto audit = audit_attack(StateEnsemble::nonmax(kPi / 6, kPi / 3), *attack);
  o.require(distinguishes_undetectably(audit), "attack distinguishes with certainty and fidelity 1");

  const auto t0 = Clock::now();
  std::size_t points = 0, satisfied = 0, attacked = 0;
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      if (i == 5 || j == 5 || i == j) continue;
      const double a = i * kPi / 20, b = j * kPi / 20;
      ++points;
      const auto [p, f] = make_nonmax_pair(a, b);
      const auto g = mor_check(p, f);
      satisfied += g.criterion_satisfied;
      worst = std::max({worst, std::abs(g.witnesses.tr_rho1_product - closed1(a, b)),
                        std::abs(g.witnesses.tr_rho2_product - closed2(a, b))});
      attacked += distinguishes_undetectably(audit_attack(StateEnsemble::nonmax(a, b), *attack));
    }
  }
  const double grid_ms = ms_since(t0);
  o.detail.precision(17);
  o.detail << "witnesses " << r.witnesses.tr_rho1_product << " / " << r.witnesses.tr_rho2_product << "; grid "
           << satisfied << "/" << points << " satisfied, " << attacked << "/" << points << " attacked";
  o.detail.precision(3);
  o.detail << ", max closed-form error " << worst << ", " << grid_ms << " ms";
  o.require(satisfied == points && attacked == points, "whole grid satisfied and attacked");
  o.require(worst <= 1e-10, "grid witnesses match closed forms");
  o.require(grid_ms <= 1000.0, "grid <= 1 s");
  return o;
}

// 6. Intercept-resend is detected: Bob errs a quarter of the time.
Outcome criterion6() {
  Outcome o;
  // Oracle: symbols 0 and 3 pass untouched; 1 and 2 collapse to |01> or |10>,
  // each decoded as 1 or 2 with probability |<psi_j|01>|^2 = 1/2.
  const auto refs = oracle::cabello_states();
  double oracle_error = 0.0;
  for (int i = 0; i < 4; ++i) {
    const oracle::Vec &sent = refs[static_cast<std::size_t>(i)];
    for (int m = 0; m < 4; ++m) {
      const double p_collapse = std::norm(sent(m));
      if (p_collapse == 0.0) continue;
      const oracle::Vec resent = oracle::ket(m == 0 ? "00" : m == 1 ? "01" : m == 2 ? "10" : "11");
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        oracle_error += 0.25 * p_collapse * std::norm(refs[static_cast<std::size_t>(j)].dot(resent));
      }
    }
  }
  const double exact = audit_attack(StateEnsemble::cabello(), *intercept_resend_attack()).bob_error_probability;
  o.require(std::abs(oracle_error - 0.25) <= 1e-12 && std::abs(exact - oracle_error) <= 1e-12,
            "exhaustive error probability 0.25");
  double lo = 1.0, hi = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SimulationConfig c;
    c.rounds = 10000;
    c.seed = seed;
    c.attack_name = "intercept-resend";
    const double err = simulate(c).bob_error_rate;
    lo = std::min(lo, err);
    hi = std::max(hi, err);
  }
  o.detail.precision(17);
  o.detail << "exhaustive " << exact << "; sampled error over seeds 0..9 in [" << lo << ", " << hi << "]";
  o.require(lo >= 0.25 - 0.013 && hi <= 0.25 + 0.013, "bob_error_rate within 0.25 +- 0.013");
  return o;
}

// 7. Property suites over seeds 0..99.
Outcome criterion7() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::pair<const char *, std::function<std::string(std::uint64_t)>>> suites{
      {"norm", props::norm_preservation},
      {"cnot-involution", props::cnot_involution},
      {"partial-trace", props::partial_trace_valid},
      {"born-3sigma", [](std::uint64_t s) { return props::born_rule(s); }},
      {"decode-encode", props::decode_encode_identity}};
  for (const auto &[name, check] : suites) {
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto msg = check(seed);
      if (!msg.empty()) {
        ++failures;
        o.require(false, std::string(name) + " seed " + std::to_string(seed) + ": " + msg);
      }
    }
    o.detail << name << " " << (100 - failures) << "/100; ";
  }
  const double ms = ms_since(t0);
  o.detail.precision(3);
  o.detail << ms / 1000.0 << " s";
  o.require(ms <= 30000.0, "total <= 30 s");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"double-CNOT pipeline exact", criterion1},
      {"undetectability (exhaustive)", criterion2},
      {"insecurity: 1.5 bits, exact fraction 0.5", criterion3},
      {"efficiency E = 1", criterion4},
      {"no-cloning criterion vs double-CNOT", criterion5},
      {"intercept-resend detectability", criterion6},
      {"property suites, 100 seeds", criterion7}};
  int failed = 0;
  int n = 0;
  for (const auto &[name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("[%s] criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.str().c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
