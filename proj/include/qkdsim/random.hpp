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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qkdsim {

/// Source of every random decision made during a simulated round.
///
/// All randomness (Born-rule outcomes, Alice's symbol, tie-break guesses) is
/// routed through `choose`, so the same code path can either be sampled from
/// a seeded generator or walked exhaustively by `enumerate_branches`.
class RandomStream {
 public:
  virtual ~RandomStream() = default;

  /// Returns index i with probability weights[i] / sum(weights). Weights are
  /// non-negative; an index with zero weight is never returned.
  virtual std::size_t choose(std::span<const double> weights) = 0;
};

/// mt19937_64-backed stream. The engine's output sequence is fixed by the
/// standard and the uniform conversion is done here, so draws are identical
/// across standard library implementations.
class SeededStream final : public RandomStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  std::size_t choose(std::span<const double> weights) override;

  /// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
  double uniform();

 private:
  std::mt19937_64 engine_;
};

/// Seed for round `round` of a run with master seed `master`. Counter based:
/// no dependence on how many draws earlier rounds made.
std::uint64_t derive_round_seed(std::uint64_t master, std::uint64_t round);

/// Human-readable description of `derive_round_seed`, echoed in reports.
std::string_view round_seed_scheme();

/// Stream that replays a fixed prefix of choices and then always takes the
/// first index with nonzero weight, recording every decision it makes.
class ScriptedStream final : public RandomStream {
 public:
  struct Decision {
    std::size_t chosen;
    std::vector<double> weights;
  };

  explicit ScriptedStream(std::vector<std::size_t> script) : script_(std::move(script)) {}

  std::size_t choose(std::span<const double> weights) override;

  const std::vector<Decision> &trail() const { return trail_; }
  /// Product of the weights of every choice taken so far.
  double probability() const { return probability_; }

 private:
  std::vector<std::size_t> script_;
  std::vector<Decision> trail_;
  double probability_ = 1.0;
};

template <typename T>
struct Branch {
  double probability;
  T value;
};

/// Runs `body` once per distinct sequence of random outcomes with nonzero
/// probability (depth-first), returning each result with its exact weight.
/// `body` must make its choices as a deterministic function of the stream's
/// answers.
template <typename F>
auto enumerate_branches(F &&body) -> std::vector<Branch<std::invoke_result_t<F &, RandomStream &>>> {
  using Result = std::invoke_result_t<F &, RandomStream &>;
  std::vector<Branch<Result>> out;
  std::vector<std::size_t> script;
  for (;;) {
    ScriptedStream stream(script);
    Result value = body(static_cast<RandomStream &>(stream));
    out.push_back(Branch<Result>{stream.probability(), std::move(value)});

    // Backtrack to the deepest decision that still has an untried
    // nonzero-weight alternative.
    const auto &trail = stream.trail();
    bool advanced = false;
    for (std::size_t depth = trail.size(); depth-- > 0;) {
      const auto &d = trail[depth];
      std::size_t next = d.chosen + 1;
      while (next < d.weights.size() && !(d.weights[next] > 0.0)) ++next;
      if (next < d.weights.size()) {
        script.clear();
        for (std::size_t k = 0; k < depth; ++k) script.push_back(trail[k].chosen);
        script.push_back(next);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace qkdsim
