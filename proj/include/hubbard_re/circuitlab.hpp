// Copyright 2026 The hubbard-re Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HUBBARD_RE_CIRCUITLAB_HPP
#define HUBBARD_RE_CIRCUITLAB_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hubbard_re/primitives.hpp"

namespace hre::circuitlab {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 16;

enum class GateKind { X, Z, H, S, Sdg, T, Tdg, CNOT, CZ, SWAP, Toffoli, Rz, CRz };

/// Gates tagged Uncompute or Prologue are simulated but left out of the
/// non-Clifford tally: uncomputation is measurement based in the cost model
/// and catalyst preparation is charged separately.
enum class Role { Compute, Uncompute, Prologue };

/// Controls come first in `qubits`; the last entry is the target (both
/// entries are symmetric for SWAP and CZ).
struct Gate {
    GateKind kind;
    std::vector<int> qubits;
    double angle = 0;
    Role role = Role::Compute;
};

struct Tally {
    long toffoli = 0;
    long t = 0;
    long rz = 0;
    long clifford = 0;
    friend bool operator==(const Tally &, const Tally &) = default;
};

class Circuit {
   public:
    explicit Circuit(int n_qubits);

    int n_qubits() const { return n_; }
    const std::vector<Gate> &gates() const { return gates_; }
    /// Scalar phase applied on top of the gate list.
    double global_phase = 0;

    Circuit &add(GateKind kind, std::vector<int> qubits, double angle = 0, Role role = Role::Compute);
    Circuit &x(int q) { return add(GateKind::X, {q}); }
    Circuit &z(int q) { return add(GateKind::Z, {q}); }
    Circuit &h(int q) { return add(GateKind::H, {q}); }
    Circuit &s(int q) { return add(GateKind::S, {q}); }
    Circuit &sdg(int q) { return add(GateKind::Sdg, {q}); }
    Circuit &t(int q) { return add(GateKind::T, {q}); }
    Circuit &tdg(int q) { return add(GateKind::Tdg, {q}); }
    Circuit &cnot(int c, int t) { return add(GateKind::CNOT, {c, t}); }
    Circuit &cz(int a, int b) { return add(GateKind::CZ, {a, b}); }
    Circuit &swap(int a, int b) { return add(GateKind::SWAP, {a, b}); }
    Circuit &toffoli(int c1, int c2, int t) { return add(GateKind::Toffoli, {c1, c2, t}); }
    Circuit &rz(int q, double angle) { return add(GateKind::Rz, {q}, angle); }

    /// Appends `other`, optionally overriding the role of every gate.
    Circuit &append(const Circuit &other);
    Circuit &append(const Circuit &other, Role role);
    /// Reversed gate list with adjoint gates.
    Circuit inverse() const;

    Tally tally() const;

   private:
    int n_;
    std::vector<Gate> gates_;
};

/// Dense state, qubit q is bit q of the amplitude index.
class StateVector {
   public:
    explicit StateVector(int n_qubits, std::uint64_t basis = 0);

    int n_qubits() const { return n_; }
    std::vector<cplx> &amplitudes() { return amp_; }
    const std::vector<cplx> &amplitudes() const { return amp_; }
    double norm_squared() const;

    void apply(const Gate &g);
    void apply(const Circuit &c);

   private:
    int n_;
    std::vector<cplx> amp_;
};

/// Column k is the circuit applied to basis state k. Limited to 10 qubits.
Eigen::MatrixXcd unitary(const Circuit &c);

/// Max entrywise |A - e^{i phi} B| after aligning the global phase on the
/// largest entry of B.
double phase_aligned_deviation(const Eigen::MatrixXcd &A, const Eigen::MatrixXcd &B);

/// Jordan-Wigner fermion operators on n <= 7 modes. Mode j is qubit j; the
/// occupied state is |1>. The constructor checks the canonical
/// anticommutation relations and throws if they fail beyond 1e-12.
class FermionOracle {
   public:
    explicit FermionOracle(int n_modes);

    int n_modes() const { return n_; }
    const Eigen::MatrixXcd &a(int j) const { return a_[j]; }
    Eigen::MatrixXcd adag(int j) const { return a_[j].adjoint(); }
    Eigen::MatrixXcd number(int j) const { return adag(j) * a_[j]; }
    Eigen::MatrixXcd identity() const;
    /// Largest deviation from {a_i, a_j^dag} = delta_ij and {a_i, a_j} = 0.
    double car_deviation() const;

   private:
    int n_;
    std::vector<Eigen::MatrixXcd> a_;
};

/// exp(i theta H) for Hermitian H via eigendecomposition.
Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixXcd &H, double theta);

struct HammingWeightCircuit {
    Circuit circuit{1};
    std::vector<int> inputs;
    /// outputs[j] holds bit j of the weight.
    std::vector<int> outputs;
    int half_adders = 0;
    int full_adders = 0;
};

/// One adder of a Hamming-weight schedule. Full adders use (a, b, s);
/// half adders use (a, s) and leave b = -1. The sum lands on s.
struct AdderStep {
    bool full = false;
    int a = 0;
    int b = -1;
    int s = 0;
    int carry = 0;
};

/// Greedy bucket schedule: reduce each weight class with full adders while
/// three or more wires remain, then one half adder if two remain. Wires
/// 0..M-1 are inputs and each adder allocates the next wire index. Works for
/// any M >= 1 (no simulation limit).
std::vector<AdderStep> hamming_weight_schedule(int M, std::vector<int> *outputs = nullptr);

/// Adds half adder (a, b) -> sum on b, carry on c.
void add_half_adder(Circuit &c, int a, int b, int carry);
/// Full adder (a, b, s) -> sum on s, majority on carry.
void add_full_adder(Circuit &c, int a, int b, int s, int carry);

/// Inputs are qubits 0..M-1; each adder appends one fresh carry qubit.
HammingWeightCircuit build_hamming_weight(int M);

struct HwpCircuit {
    Circuit circuit{1};
    HwpStrategy strategy = HwpStrategy::Baseline;
    double theta = 0;
    std::vector<int> inputs;
    /// Catalyst register, bit j rotated by -2^j theta (catalyzed only).
    std::vector<int> catalyst;
};

/// Applies Rz(theta) to each of M <= 5 targets through the Hamming weight.
HwpCircuit build_hwp(int M, double theta, HwpStrategy strategy);

/// Product state of the catalyst register, indexed by the register value.
std::vector<cplx> catalyst_state(const HwpCircuit &h);

/// The 2^M x 2^M operator induced on the targets when every other qubit
/// starts in |0> (the prologue prepares the catalyst) and is projected back
/// onto its initial state.
Eigen::MatrixXcd hwp_induced_unitary(const HwpCircuit &h);

/// Fidelity of the catalyst register's reduced state with the prepared
/// catalyst after running on `input` (a 2^M target state).
double catalyst_fidelity(const HwpCircuit &h, const std::vector<cplx> &input);

/// Adjacent fermionic swap on qubits (i, i+1): SWAP then CZ.
Circuit build_fswap(int n_qubits, int i, int j);
/// Swap of modes i and i+k through 2k-1 adjacent swaps.
Circuit build_long_range_fswap(int n_qubits, int i, int k);

/// Two-site fermionic Fourier transform on adjacent modes (j, j+1), using
/// two T-type gates. F|00> = |00>.
Circuit build_two_site_fourier(int n_qubits, int j);

/// exp(i theta K) on four modes (qubits 0..3).
Circuit build_plaquette_evolution(double theta);

/// K = 2(b^dag b - c^dag c) on the first four modes of the oracle.
Eigen::MatrixXcd plaquette_k(const FermionOracle &f);

struct CheckResult {
    std::string name;
    double deviation = 0;
    double tolerance = 0;
    bool pass = false;
};

/// Fixed pseudo-random angles in (-pi, pi], portable across platforms.
std::vector<double> fixed_angles(int count, std::uint64_t seed);

/// Full gadget verification suite.
std::vector<CheckResult> run_verification_suite();

}  // namespace hre::circuitlab

#endif
