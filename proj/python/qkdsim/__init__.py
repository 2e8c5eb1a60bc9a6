# Copyright 2026 The qkdsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Orthogonal-state QKD simulator: signal alphabets, attacks, no-cloning audit."""

import json as _json

from ._core import (
    InvariantViolation,
    IoError,
    PhaseViolation,
    QubitId,
    StateEnsemble,
    StateVector,
    apply_cnot,
    attack_names,
    efficiency,
    encode,
    eve_mutual_information,
    inner_product,
    make_nonmax_pair,
    measure_qubit,
    mor_check,
    reduced_density,
    tensor_product,
)


def simulate(rounds=10000, seed=0, attack="none", ensemble="cabello", alpha=None, beta=None, threads=0):
    """Monte-Carlo run; returns the report as a dict (without timing)."""
    return _json.loads(_core._simulate_json(rounds, seed, attack, ensemble, alpha, beta, threads))


def mor_check_pair(alpha, beta):
    """No-cloning audit plus exact double-CNOT audit of the nonmax pair."""
    return _json.loads(_core._mor_check_json(alpha, beta))


def attack_demo(symbol, attack="double-cnot", seed=0):
    """Step-by-step global states of one four-state round."""
    return _json.loads(_core._attack_demo_json(symbol, attack, seed))


from . import _core  # noqa: E402

__all__ = [
    "InvariantViolation", "IoError", "PhaseViolation", "QubitId", "StateEnsemble", "StateVector",
    "apply_cnot", "attack_demo", "attack_names", "efficiency", "encode", "eve_mutual_information",
    "inner_product", "make_nonmax_pair", "measure_qubit", "mor_check", "mor_check_pair",
    "reduced_density", "simulate", "tensor_product",
]
