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

#include <stdexcept>
#include <string>

namespace qkdsim {

/// Caller supplied something outside an operation's domain (bad label,
/// out-of-range symbol, excluded parameter, non-orthogonal input, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string &what) : std::invalid_argument(what) {}
};

/// An attack hook tried to touch a qubit that is not in its channel view.
class PhaseViolation : public std::logic_error {
 public:
  explicit PhaseViolation(const std::string &what) : std::logic_error(what) {}
};

/// A quantity that the mathematics guarantees (norm, trace, branch weight)
/// came out wrong.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string &what) : std::logic_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace qkdsim
