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

import math

import numpy as np
import pytest

import qkdsim
from qkdsim import QubitId


def test_encode_four_state_alphabet():
    e = qkdsim.StateEnsemble.cabello()
    assert len(e) == 4 and e.bits_per_symbol == 2
    s = qkdsim.encode(e, 2)
    h = 1 / math.sqrt(2)
    np.testing.assert_allclose(s.amplitudes, [0, -h, h, 0], atol=1e-15)
    assert s.qubit_order == [QubitId.Qubit1, QubitId.Qubit2]


def test_double_cnot_flags_parity():
    e = qkdsim.StateEnsemble.cabello()
    anc = qkdsim.StateVector.basis([QubitId.EveAncilla], 0)
    for i, flag in enumerate([0, 1, 1, 0]):
        s = qkdsim.tensor_product(qkdsim.encode(e, i), anc)
        s = qkdsim.apply_cnot(s, QubitId.Qubit1, QubitId.EveAncilla)
        s = qkdsim.apply_cnot(s, QubitId.Qubit2, QubitId.EveAncilla)
        result, prob, _ = qkdsim.measure_qubit(s, QubitId.EveAncilla, seed=1)
        assert (result, prob) == (flag, 1.0)


def test_reduced_density_of_bell_state_is_maximally_mixed():
    e = qkdsim.StateEnsemble.cabello()
    rho = qkdsim.reduced_density(qkdsim.encode(e, 1), [QubitId.Qubit1])
    np.testing.assert_allclose(rho, np.eye(2) / 2, atol=1e-15)


def test_mor_example_and_attack():
    psi, phi = qkdsim.make_nonmax_pair(math.pi / 6, math.pi / 3)
    r = qkdsim.mor_check(psi, phi)
    assert r["criterion_satisfied"]
    assert r["witnesses"]["tr_rho1_product"] == pytest.approx(0.375, abs=1e-10)
    assert r["witnesses"]["tr_rho2_product"] == pytest.approx(0.625, abs=1e-10)
    doc = qkdsim.mor_check_pair(math.pi / 6, math.pi / 3)
    assert doc["attack_distinguishes"] is True


def test_mutual_information_and_efficiency():
    e = qkdsim.StateEnsemble.cabello()
    assert qkdsim.eve_mutual_information(e, "double-cnot") == pytest.approx(1.5, abs=1e-12)
    assert qkdsim.eve_mutual_information(e, "none") == 0.0
    assert qkdsim.efficiency(2, 2, 0) == 1.0


def test_simulate_is_deterministic():
    a = qkdsim.simulate(rounds=5000, seed=11, attack="double-cnot", threads=1)
    b = qkdsim.simulate(rounds=5000, seed=11, attack="double-cnot", threads=4)
    assert a == b
    assert a["bob_error_rate"] == 0.0
    assert abs(a["eve_exact_fraction"] - 0.5) < 0.03
    nm = qkdsim.simulate(rounds=1000, attack="double-cnot", ensemble="nonmax", alpha=0.4, beta=1.1)
    assert nm["eve_exact_fraction"] == 1.0


def test_attack_demo_trace():
    doc = qkdsim.attack_demo(3)
    assert doc["eve_knowledge"] == "exact:3"
    assert [s["step"] for s in doc["steps"]][:2] == ["encode symbol 3", "attach ancilla"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError, match="pi/4"):
        qkdsim.StateEnsemble.nonmax(math.pi / 4, 1.0)
    with pytest.raises(ValueError):
        qkdsim.simulate(rounds=0)
    with pytest.raises(ValueError):
        qkdsim.encode(qkdsim.StateEnsemble.cabello(), 4)
