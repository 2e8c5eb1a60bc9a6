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

#include "qkdsim/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qkdsim/errors.hpp"
#include "qkdsim/format.hpp"

namespace qkdsim {

namespace {

// A selected measurement branch must carry at least this much norm.
constexpr double kMinBranchNorm = 1e-9;

std::string order_string(const std::vector<QubitId> &order) {
  std::string out = "(";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ", ";
    out += to_string(order[i]);
  }
  return out + ")";
}

void validate_order(const std::vector<QubitId> &order) {
  if (order.empty()) throw InvalidInput("qubit order is empty");
  if (order.size() > kMaxQubits) {
    throw InvalidInput("at most " + std::to_string(kMaxQubits) + " qubits are supported, got " + std::to_string(order.size()));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (order[i] == order[j]) throw InvalidInput("duplicate qubit label " + std::string(to_string(order[i])));
    }
  }
}

void require_same_order(const std::vector<QubitId> &a, const std::vector<QubitId> &b, std::string_view what) {
  if (a != b) {
    throw InvalidInput(std::string(what) + ": qubit orders differ " + order_string(a) + " vs " + order_string(b));
  }
}

Eigen::VectorXcd to_eigen(const StateVector &s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

void check_orthonormal(std::span<const StateVector> basis) {
  if (basis.empty()) throw InvalidInput("project_onto_basis: empty basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require_same_order(basis[0].qubit_order(), basis[i].qubit_order(), "project_onto_basis");
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Amplitude overlap = inner_product(basis[i], basis[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > kSpectralTol) {
        std::ostringstream msg;
        msg << "project_onto_basis: basis vectors " << i << " and " << j << " are not orthonormal (overlap "
            << format_real(overlap.real()) << (overlap.imag() < 0 ? "" : "+") << format_real(overlap.imag()) << "i)";
        throw InvalidInput(msg.str());
      }
    }
  }
}

std::vector<double> check_completeness(std::vector<double> probs) {
  double total = 0.0;
  for (double p : probs) total += p;
  if (std::abs(total - 1.0) > kSpectralTol) {
    throw InvalidInput("project_onto_basis: state has weight " + format_real(1.0 - total) + " outside the span of the basis");
  }
  // Absorb rounding so a certain outcome has probability exactly 1.
  for (double &p : probs) p /= total;
  return probs;
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

std::string_view to_string(QubitId q) {
  switch (q) {
    case QubitId::Qubit1:
      return "Qubit1";
    case QubitId::Qubit2:
      return "Qubit2";
    case QubitId::EveAncilla:
      return "EveAncilla";
    case QubitId::Aux:
      return "Aux";
  }
  return "?";
}

StateVector::StateVector(std::vector<QubitId> order, std::vector<Amplitude> amplitudes)
    : order_(std::move(order)), amps_(std::move(amplitudes)) {
  validate_order(order_);
  const std::size_t expected = std::size_t{1} << order_.size();
  if (amps_.size() != expected) {
    throw InvalidInput("state over " + std::to_string(order_.size()) + " qubits needs " + std::to_string(expected) +
                       " amplitudes, got " + std::to_string(amps_.size()));
  }
  double norm2 = 0.0;
  for (const auto &a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw InvalidInput("non-finite amplitude");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > kExactTol) {
    throw InvalidInput("state is not normalized: sum |a|^2 = " + format_real(norm2));
  }
}

StateVector StateVector::basis(std::vector<QubitId> order, std::size_t index) {
  const std::size_t dim = order.size() <= kMaxQubits ? std::size_t{1} << order.size() : 0;
  if (index >= dim && dim != 0) throw InvalidInput("basis index " + std::to_string(index) + " out of range");
  std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
  if (dim) amps[index] = 1.0;
  return StateVector(std::move(order), std::move(amps));
}

bool StateVector::contains(QubitId q) const { return std::find(order_.begin(), order_.end(), q) != order_.end(); }

std::size_t StateVector::position(QubitId q) const {
  auto it = std::find(order_.begin(), order_.end(), q);
  if (it == order_.end()) {
    throw InvalidInput("qubit " + std::string(to_string(q)) + " is not part of state " + order_string(order_));
  }
  return static_cast<std::size_t>(it - order_.begin());
}

DensityMatrix::DensityMatrix(std::vector<QubitId> order, Eigen::MatrixXcd entries)
    : order_(std::move(order)), m_(std::move(entries)) {
  validate_order(order_);
  const auto expected = static_cast<Eigen::Index>(std::size_t{1} << order_.size());
  if (m_.rows() != expected || m_.cols() != expected) {
    throw InvalidInput("density matrix over " + std::to_string(order_.size()) + " qubits must be " +
                       std::to_string(expected) + "x" + std::to_string(expected));
  }
  if (!m_.allFinite()) throw InvalidInput("density matrix has non-finite entries");
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kExactTol) throw InvalidInput("density matrix is not Hermitian (max |M - M^dagger| = " + format_real(herm) + ")");
  const Amplitude tr = m_.trace();
  if (std::abs(tr - Amplitude{1.0, 0.0}) > kExactTol) {
    throw InvalidInput("density matrix trace is " + format_real(tr.real()) + ", expected 1");
  }
  const double smallest = eigenvalues()(0);
  if (smallest < -kSpectralTol) {
    throw InvalidInput("density matrix is not positive semidefinite (eigenvalue " + format_real(smallest) + ")");
  }
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
  require_same_order(a.qubit_order(), b.qubit_order(), "inner_product");
  Amplitude sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

StateVector tensor_product(const StateVector &a, const StateVector &b) {
  for (QubitId q : b.qubit_order()) {
    if (a.contains(q)) throw InvalidInput("tensor_product: duplicate qubit label " + std::string(to_string(q)));
  }
  std::vector<QubitId> order = a.qubit_order();
  order.insert(order.end(), b.qubit_order().begin(), b.qubit_order().end());
  if (order.size() > kMaxQubits) throw InvalidInput("tensor_product: result exceeds " + std::to_string(kMaxQubits) + " qubits");

  std::vector<Amplitude> amps;
  amps.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) amps.push_back(a[i] * b[j]);
  }
  return StateVector(std::move(order), std::move(amps));
}

StateVector apply_cnot(const StateVector &state, QubitId control, QubitId target) {
  if (control == target) throw InvalidInput("apply_cnot: control and target are both " + std::string(to_string(control)));
  const std::size_t cmask = state.mask(control);
  const std::size_t tmask = state.mask(target);
  std::vector<Amplitude> out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(out[i], out[i | tmask]);
  }
  return StateVector(state.qubit_order(), std::move(out));
}

std::array<double, 2> qubit_probabilities(const StateVector &state, QubitId q) {
  const std::size_t m = state.mask(q);
  std::array<double, 2> p{0.0, 0.0};
  for (std::size_t i = 0; i < state.dim(); ++i) p[(i & m) ? 1 : 0] += std::norm(state[i]);
  // The state is normalized to 1e-12; absorb the rounding.
  const double total = p[0] + p[1];
  return {p[0] / total, p[1] / total};
}

MeasurementOutcome measure_qubit(const StateVector &state, QubitId q, RandomStream &rng) {
  const std::size_t m = state.mask(q);
  double amp_norm2 = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) amp_norm2 += std::norm(state[i]);
  const std::array<double, 2> p = qubit_probabilities(state, q);
  // Branches too thin to renormalize are not physical outcomes.
  std::array<double, 2> weights = p;
  for (double &w : weights) {
    if (w < kMinBranchNorm * kMinBranchNorm) w = 0.0;
  }
  const int result = static_cast<int>(rng.choose(weights));
  const double norm = std::sqrt(p[result] * amp_norm2);
  if (!(norm >= kMinBranchNorm)) {
    throw InvariantViolation("measure_qubit: selected branch has norm " + format_real(norm));
  }
  std::vector<Amplitude> post(state.dim(), Amplitude{0.0, 0.0});
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (((i & m) ? 1 : 0) == result) post[i] = state[i] / norm;
  }
  return MeasurementOutcome{result, p[result], StateVector(state.qubit_order(), std::move(post))};
}

std::vector<double> project_onto_basis(const StateVector &state, std::span<const StateVector> basis) {
  check_orthonormal(basis);
  require_same_order(basis[0].qubit_order(), state.qubit_order(), "project_onto_basis");
  std::vector<double> probs;
  probs.reserve(basis.size());
  for (const auto &b : basis) probs.push_back(std::norm(inner_product(b, state)));
  return check_completeness(std::move(probs));
}

std::vector<double> project_onto_basis(const DensityMatrix &rho, std::span<const StateVector> basis) {
  check_orthonormal(basis);
  require_same_order(basis[0].qubit_order(), rho.qubit_order(), "project_onto_basis");
  std::vector<double> probs;
  probs.reserve(basis.size());
  for (const auto &b : basis) probs.push_back(fidelity_to(rho, b));
  return check_completeness(std::move(probs));
}

DensityMatrix density_of(const StateVector &state) {
  const Eigen::VectorXcd v = to_eigen(state);
  return DensityMatrix(state.qubit_order(), v * v.adjoint());
}

DensityMatrix reduced_density(const StateVector &state, std::span<const QubitId> keep) {
  if (keep.empty()) throw InvalidInput("reduced_density: keep set is empty");
  std::vector<bool> kept(state.num_qubits(), false);
  for (QubitId q : keep) {
    const std::size_t pos = state.position(q);
    if (kept[pos]) throw InvalidInput("reduced_density: qubit " + std::string(to_string(q)) + " listed twice");
    kept[pos] = true;
  }
  if (keep.size() == state.num_qubits()) throw InvalidInput("reduced_density: keep set is the whole system");

  std::vector<QubitId> order;
  for (std::size_t pos = 0; pos < state.num_qubits(); ++pos) {
    if (kept[pos]) order.push_back(state.qubit_order()[pos]);
  }

  // Split every full index into (kept bits, traced bits), both big-endian.
  const std::size_t n = state.num_qubits();
  std::vector<std::size_t> keep_idx(state.dim()), env_idx(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    std::size_t k = 0, e = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t bit = (i >> (n - 1 - pos)) & 1U;
      if (kept[pos]) {
        k = (k << 1) | bit;
      } else {
        e = (e << 1) | bit;
      }
    }
    keep_idx[i] = k;
    env_idx[i] = e;
  }

  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << order.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    for (std::size_t j = 0; j < state.dim(); ++j) {
      if (env_idx[i] == env_idx[j]) {
        m(static_cast<Eigen::Index>(keep_idx[i]), static_cast<Eigen::Index>(keep_idx[j])) += state[i] * std::conj(state[j]);
      }
    }
  }
  return DensityMatrix(std::move(order), std::move(m));
}

DensityMatrix reduced_density(const StateVector &state, std::initializer_list<QubitId> keep) {
  return reduced_density(state, std::span<const QubitId>(keep.begin(), keep.size()));
}

double trace_product(const DensityMatrix &a, const DensityMatrix &b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("trace_product: dimension mismatch " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
  // tr(ab) = sum_ij a_ij b_ji = sum_ij a_ij conj(b_ij) for Hermitian b. The
  // real part is then symmetric in (a, b) term by term, so swapping the
  // arguments gives a bit-identical result.
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Amplitude x = a(i, j), y = b(i, j);
      re += x.real() * y.real() + x.imag() * y.imag();
      im += x.imag() * y.real() - x.real() * y.imag();
    }
  }
  if (std::abs(im) > kExactTol) {
    throw InvariantViolation("trace_product: imaginary part " + format_real(im) + " exceeds tolerance");
  }
  return re;
}

double purity(const DensityMatrix &rho) { return trace_product(rho, rho); }

double fidelity_to(const StateVector &state, const StateVector &reference) {
  return clamp_unit(std::norm(inner_product(reference, state)));
}

double fidelity_to(const DensityMatrix &rho, const StateVector &reference) {
  require_same_order(rho.qubit_order(), reference.qubit_order(), "fidelity_to");
  const Eigen::VectorXcd v = to_eigen(reference);
  return clamp_unit((v.adjoint() * rho.entries() * v)(0).real());
}

double max_entry_distance(const DensityMatrix &a, const DensityMatrix &b) {
  if (a.dim() != b.dim()) throw InvalidInput("max_entry_distance: dimension mismatch");
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

std::string to_ket_string(const StateVector &state) {
  std::string out;
  const std::size_t n = state.num_qubits();
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const Amplitude a = state[i];
    if (a == Amplitude{0.0, 0.0}) continue;
    std::string coeff;
    bool negative = false;
    if (a.imag() == 0.0) {
      negative = a.real() < 0.0;
      coeff = format_real(std::abs(a.real()));
    } else if (a.real() == 0.0) {
      negative = a.imag() < 0.0;
      coeff = format_real(std::abs(a.imag())) + "i";
    } else {
      coeff = "(" + format_real(a.real()) + (a.imag() < 0 ? "-" : "+") + format_real(std::abs(a.imag())) + "i)";
    }
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff + "|";
    for (std::size_t pos = 0; pos < n; ++pos) out += ((i >> (n - 1 - pos)) & 1U) ? '1' : '0';
    out += ">";
  }
  return out;
}

}  // namespace qkdsim
