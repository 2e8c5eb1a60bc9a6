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

#include "qkdsim/random.hpp"

#include "qkdsim/errors.hpp"

namespace qkdsim {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t last_positive(std::span<const double> weights) {
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0.0) return i;
  }
  throw InvariantViolation("choose: no outcome has positive weight");
}

}  // namespace

double SeededStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t SeededStream::choose(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) total += w > 0.0 ? w : 0.0;
  if (!(total > 0.0)) throw InvariantViolation("choose: no outcome has positive weight");
  const double u = uniform() * total;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cumulative += weights[i];
    if (weights[i] > 0.0 && u < cumulative) return i;
  }
  // Rounding left the cumulative sum a hair below the total.
  return last_positive(weights);
}

std::uint64_t derive_round_seed(std::uint64_t master, std::uint64_t round) {
  return splitmix64(master + (round + 1) * kGolden);
}

std::string_view round_seed_scheme() {
  return "mt19937_64(splitmix64(seed + (round + 1) * 0x9e3779b97f4a7c15))";
}

std::size_t ScriptedStream::choose(std::span<const double> weights) {
  std::size_t pick;
  if (trail_.size() < script_.size()) {
    pick = script_[trail_.size()];
    if (pick >= weights.size() || !(weights[pick] > 0.0)) {
      throw InvariantViolation("enumerate_branches: body is not deterministic in its choices");
    }
  } else {
    pick = 0;
    while (pick < weights.size() && !(weights[pick] > 0.0)) ++pick;
    if (pick == weights.size()) throw InvariantViolation("choose: no outcome has positive weight");
  }
  // Weights are relative; the branch takes its conditional share.
  double total = 0.0;
  for (double w : weights) total += w > 0.0 ? w : 0.0;
  probability_ *= weights[pick] / total;
  trail_.push_back(Decision{pick, std::vector<double>(weights.begin(), weights.end())});
  return pick;
}

}  // namespace qkdsim
