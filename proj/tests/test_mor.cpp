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

#include "qkdsim/mor.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qkdsim/errors.hpp"
#include "qkdsim/information.hpp"
#include "qkdsim/protocol.hpp"

using namespace qkdsim;

namespace {

constexpr double kPi = std::numbers::pi;

double closed_rho1(double a, double b) {
  return std::pow(std::cos(a) * std::cos(b), 2) + std::pow(std::sin(a) * std::sin(b), 2);
}
double closed_rho2(double a, double b) {
  return std::pow(std::sin(a) * std::cos(b), 2) + std::pow(std::cos(a) * std::sin(b), 2);
}

std::vector<std::pair<double, double>> admitted_grid() {
  std::vector<std::pair<double, double>> out;
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      if (i == 5 || j == 5 || i == j) continue;
      out.emplace_back(i * kPi / 20, j * kPi / 20);
    }
  }
  return out;
}

}  // namespace

TEST(MakeNonmaxPair, Amplitudes) {
  const auto [psi, phi] = make_nonmax_pair(kPi / 6, kPi / 3);
  const double r3 = std::sqrt(3.0) / 2;
  EXPECT_NEAR(std::abs(psi[0]), 0.0, 1e-15);
  EXPECT_NEAR(psi[1].real(), r3, 1e-15);
  EXPECT_NEAR(psi[2].real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(psi[3]), 0.0, 1e-15);
  EXPECT_NEAR(phi[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(phi[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(phi[2]), 0.0, 1e-15);
  EXPECT_NEAR(phi[3].real(), r3, 1e-15);
  EXPECT_EQ(inner_product(psi, phi), Amplitude(0.0));
}

TEST(MakeNonmaxPair, DomainViolationsAreNamed) {
  const auto message = [](double a, double b) {
    try {
      make_nonmax_pair(a, b);
    } catch (const InvalidInput &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(kPi / 4, kPi / 3).find("alpha must differ from pi/4"), std::string::npos);
  EXPECT_NE(message(kPi / 3, kPi / 4).find("beta must differ from pi/4"), std::string::npos);
  EXPECT_NE(message(0.3, 0.3).find("alpha must differ from beta"), std::string::npos);
  EXPECT_NE(message(0.0, 0.3).find("0 < alpha"), std::string::npos);
  EXPECT_NE(message(0.3, 2.0).find("beta < pi/2"), std::string::npos);
}

TEST(MorCheck, NonMaxExample) {
  const auto [psi, phi] = make_nonmax_pair(kPi / 6, kPi / 3);
  const auto r = mor_check(psi, phi);
  EXPECT_FALSE(r.rho1_orthogonal);
  EXPECT_FALSE(r.rho1_identical);
  EXPECT_FALSE(r.rho2_orthogonal);
  EXPECT_TRUE(r.criterion_satisfied);
  EXPECT_NEAR(r.witnesses.tr_rho1_product, 0.375, 1e-10);
  EXPECT_NEAR(r.witnesses.rho1_distance, 0.5, 1e-10);
  EXPECT_NEAR(r.witnesses.tr_rho2_product, 0.625, 1e-10);
}

TEST(MorCheck, OrthogonalProductStatesFail) {
  const auto e = StateEnsemble::cabello();
  const auto r = mor_check(e.states()[0], e.states()[3]);
  EXPECT_TRUE(r.rho1_orthogonal);
  EXPECT_NEAR(r.witnesses.tr_rho1_product, 0.0, 1e-15);
  EXPECT_FALSE(r.criterion_satisfied);
}

TEST(MorCheck, BellPairHasIdenticalMarginals) {
  const auto e = StateEnsemble::cabello();
  const auto r = mor_check(e.states()[1], e.states()[2]);
  EXPECT_TRUE(r.rho1_identical);
  EXPECT_NEAR(r.witnesses.rho1_distance, 0.0, 1e-15);
  EXPECT_FALSE(r.criterion_satisfied);
}

TEST(MorCheck, Rejections) {
  const auto e = StateEnsemble::cabello();
  EXPECT_THROW(mor_check(e.states()[1], e.states()[1]), InvalidInput);
  EXPECT_THROW(mor_check(StateVector::basis({QubitId::Qubit1}, 0), StateVector::basis({QubitId::Qubit1}, 1)), InvalidInput);
  try {
    mor_check(e.states()[0], StateVector({QubitId::Qubit1, QubitId::Qubit2}, {0.6, 0.8, 0, 0}));
    FAIL();
  } catch (const InvalidInput &err) {
    EXPECT_NE(std::string(err.what()).find("0.59999999999999998"), std::string::npos) << err.what();
  }
}

TEST(MorCheck, GridMatchesClosedFormsAndIsSymmetric) {
  const auto grid = admitted_grid();
  EXPECT_EQ(grid.size(), 56u);
  for (auto [a, b] : grid) {
    const auto [psi, phi] = make_nonmax_pair(a, b);
    const auto r = mor_check(psi, phi);
    EXPECT_TRUE(r.criterion_satisfied) << a << " " << b;
    EXPECT_NEAR(r.witnesses.tr_rho1_product, closed_rho1(a, b), 1e-10);
    EXPECT_NEAR(r.witnesses.tr_rho2_product, closed_rho2(a, b), 1e-10);

    const auto s = mor_check(phi, psi);
    EXPECT_EQ(s.rho1_orthogonal, r.rho1_orthogonal);
    EXPECT_EQ(s.rho1_identical, r.rho1_identical);
    EXPECT_EQ(s.rho2_orthogonal, r.rho2_orthogonal);
    EXPECT_EQ(s.criterion_satisfied, r.criterion_satisfied);
    EXPECT_EQ(s.witnesses.tr_rho1_product, r.witnesses.tr_rho1_product);
    EXPECT_EQ(s.witnesses.rho1_distance, r.witnesses.rho1_distance);
    EXPECT_EQ(s.witnesses.tr_rho2_product, r.witnesses.tr_rho2_product);
  }
}

TEST(MorCheck, CriterionHoldsYetAttackSucceedsOnGrid) {
  const auto attack = double_cnot_attack();
  for (auto [a, b] : admitted_grid()) {
    const auto audit = audit_attack(StateEnsemble::nonmax(a, b), *attack);
    EXPECT_TRUE(distinguishes_undetectably(audit)) << a << " " << b;
  }
}

TEST(MorCheckAll, FourStateAlphabetFailsAsAWhole) {
  const auto e = StateEnsemble::cabello();
  const auto r = mor_check_all(e.states());
  EXPECT_EQ(r.pairs.size(), 6u);
  EXPECT_FALSE(r.criterion_satisfied);
  const auto [psi, phi] = make_nonmax_pair(0.4, 1.0);
  const std::vector<StateVector> pair{psi, phi};
  EXPECT_TRUE(mor_check_all(pair).criterion_satisfied);
  EXPECT_THROW(mor_check_all(std::span<const StateVector>(pair.data(), 1)), InvalidInput);
}
