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

#include "hubbard_re/circuitlab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hre::circuitlab {

namespace {

constexpr double kPi = std::numbers::pi;

using Mat2 = std::array<cplx, 4>;

Mat2 single_matrix(GateKind k, double angle) {
    const cplx i(0, 1);
    const double r = 1 / std::sqrt(2.0);
    switch (k) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::Toffoli:
            return {0, 1, 1, 0};
        case GateKind::Z:
            return {1, 0, 0, -1};
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::S:
            return {1, 0, 0, i};
        case GateKind::Sdg:
            return {1, 0, 0, -i};
        case GateKind::T:
            return {1, 0, 0, std::exp(i * (kPi / 4))};
        case GateKind::Tdg:
            return {1, 0, 0, std::exp(-i * (kPi / 4))};
        case GateKind::Rz:
        case GateKind::CRz:
            return {std::exp(-i * (angle / 2)), 0, 0, std::exp(i * (angle / 2))};
        default:
            throw std::logic_error("not a single-target gate");
    }
}

int arity(GateKind k) {
    switch (k) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::CRz:
            return 2;
        case GateKind::Toffoli:
            return 3;
        default:
            return 1;
    }
}

}  // namespace

Circuit::Circuit(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit size must be within 1.." + std::to_string(kMaxQubits));
    }
}

Circuit &Circuit::add(GateKind kind, std::vector<int> qubits, double angle, Role role) {
    if (int(qubits.size()) != arity(kind)) {
        throw std::invalid_argument("wrong number of qubits for gate");
    }
    for (size_t a = 0; a < qubits.size(); a++) {
        if (qubits[a] < 0 || qubits[a] >= n_) {
            throw std::invalid_argument("qubit index out of range");
        }
        for (size_t b = 0; b < a; b++) {
            if (qubits[a] == qubits[b]) {
                throw std::invalid_argument("gate qubits must be distinct");
            }
        }
    }
    gates_.push_back(Gate{kind, std::move(qubits), angle, role});
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_ > n_) {
        throw std::invalid_argument("appended circuit is wider");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    global_phase += other.global_phase;
    return *this;
}

Circuit &Circuit::append(const Circuit &other, Role role) {
    size_t start = gates_.size();
    append(other);
    for (size_t k = start; k < gates_.size(); k++) {
        gates_[k].role = role;
    }
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv(n_);
    inv.global_phase = -global_phase;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::S:
                g.kind = GateKind::Sdg;
                break;
            case GateKind::Sdg:
                g.kind = GateKind::S;
                break;
            case GateKind::T:
                g.kind = GateKind::Tdg;
                break;
            case GateKind::Tdg:
                g.kind = GateKind::T;
                break;
            case GateKind::Rz:
            case GateKind::CRz:
                g.angle = -g.angle;
                break;
            default:
                break;
        }
        inv.gates_.push_back(g);
    }
    return inv;
}

Tally Circuit::tally() const {
    Tally t;
    for (const Gate &g : gates_) {
        if (g.role != Role::Compute) {
            continue;
        }
        switch (g.kind) {
            case GateKind::Toffoli:
                t.toffoli++;
                break;
            case GateKind::T:
            case GateKind::Tdg:
                t.t++;
                break;
            case GateKind::Rz:
            case GateKind::CRz:
                t.rz++;
                break;
            default:
                t.clifford++;
                break;
        }
    }
    return t;
}

StateVector::StateVector(int n_qubits, std::uint64_t basis) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("state size must be within 1.." + std::to_string(kMaxQubits));
    }
    amp_.assign(std::size_t(1) << n_qubits, 0.0);
    if (basis >= amp_.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    amp_[basis] = 1.0;
}

double StateVector::norm_squared() const {
    double s = 0;
    for (const cplx &a : amp_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::apply(const Gate &g) {
    const std::size_t dim = amp_.size();
    if (g.kind == GateKind::SWAP) {
        const std::size_t a = std::size_t(1) << g.qubits[0], b = std::size_t(1) << g.qubits[1];
        for (std::size_t i = 0; i < dim; i++) {
            if ((i & a) && !(i & b)) {
                std::swap(amp_[i], amp_[i ^ a ^ b]);
            }
        }
        return;
    }
    if (g.kind == GateKind::CZ) {
        const std::size_t m = (std::size_t(1) << g.qubits[0]) | (std::size_t(1) << g.qubits[1]);
        for (std::size_t i = 0; i < dim; i++) {
            if ((i & m) == m) {
                amp_[i] = -amp_[i];
            }
        }
        return;
    }
    std::size_t cmask = 0;
    for (size_t k = 0; k + 1 < g.qubits.size(); k++) {
        cmask |= std::size_t(1) << g.qubits[k];
    }
    const std::size_t tbit = std::size_t(1) << g.qubits.back();
    const Mat2 m = single_matrix(g.kind, g.angle);
    for (std::size_t i = 0; i < dim; i++) {
        if ((i & tbit) || (i & cmask) != cmask) {
            continue;
        }
        const cplx a = amp_[i], b = amp_[i | tbit];
        amp_[i] = m[0] * a + m[1] * b;
        amp_[i | tbit] = m[2] * a + m[3] * b;
    }
}

void StateVector::apply(const Circuit &c) {
    if (c.n_qubits() > n_) {
        throw std::invalid_argument("circuit wider than state");
    }
    for (const Gate &g : c.gates()) {
        apply(g);
    }
    if (c.global_phase != 0) {
        const cplx ph = std::polar(1.0, c.global_phase);
        for (cplx &a : amp_) {
            a *= ph;
        }
    }
}

Eigen::MatrixXcd unitary(const Circuit &c) {
    if (c.n_qubits() > 10) {
        throw std::invalid_argument("dense unitary limited to 10 qubits");
    }
    const std::size_t dim = std::size_t(1) << c.n_qubits();
    Eigen::MatrixXcd U(dim, dim);
    for (std::size_t k = 0; k < dim; k++) {
        StateVector sv(c.n_qubits(), k);
        sv.apply(c);
        for (std::size_t r = 0; r < dim; r++) {
            U(r, k) = sv.amplitudes()[r];
        }
    }
    return U;
}

double phase_aligned_deviation(const Eigen::MatrixXcd &A, const Eigen::MatrixXcd &B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw std::invalid_argument("shape mismatch");
    }
    Eigen::Index r = 0, c = 0;
    B.cwiseAbs().maxCoeff(&r, &c);
    cplx ph = 1;
    if (std::abs(A(r, c)) > 0) {
        ph = (B(r, c) / A(r, c));
        ph /= std::abs(ph);
    }
    return (A * ph - B).cwiseAbs().maxCoeff();
}

FermionOracle::FermionOracle(int n_modes) : n_(n_modes) {
    if (n_modes < 1 || n_modes > 7) {
        throw std::invalid_argument("FermionOracle supports 1..7 modes");
    }
    const Eigen::Index dim = Eigen::Index(1) << n_modes;
    for (int j = 0; j < n_modes; j++) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index k = 0; k < dim; k++) {
            if (!((k >> j) & 1)) {
                continue;
            }
            // Parity of the occupied modes below j.
            int below = std::popcount(std::uint64_t(k) & ((std::uint64_t(1) << j) - 1));
            a(k ^ (Eigen::Index(1) << j), k) = (below % 2) ? -1.0 : 1.0;
        }
        a_.push_back(a);
    }
    double dev = car_deviation();
    if (dev > 1e-12) {
        throw std::runtime_error("FermionOracle: anticommutation relations violated");
    }
}

Eigen::MatrixXcd FermionOracle::identity() const {
    const Eigen::Index dim = Eigen::Index(1) << n_;
    return Eigen::MatrixXcd::Identity(dim, dim);
}

double FermionOracle::car_deviation() const {
    double dev = 0;
    const Eigen::MatrixXcd I = identity();
    for (int i = 0; i < n_; i++) {
        for (int j = 0; j < n_; j++) {
            Eigen::MatrixXcd ac = a_[i] * adag(j) + adag(j) * a_[i];
            if (i == j) {
                ac -= I;
            }
            Eigen::MatrixXcd aa = a_[i] * a_[j] + a_[j] * a_[i];
            dev = std::max({dev, ac.cwiseAbs().maxCoeff(), aa.cwiseAbs().maxCoeff()});
        }
    }
    return dev;
}

Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixXcd &H, double theta) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    Eigen::VectorXcd ph(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < ph.size(); k++) {
        ph(k) = std::polar(1.0, theta * es.eigenvalues()(k));
    }
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

void add_half_adder(Circuit &c, int a, int b, int carry) {
    c.toffoli(a, b, carry);
    c.cnot(a, b);
}

void add_full_adder(Circuit &c, int a, int b, int s, int carry) {
    c.cnot(a, b);
    c.cnot(a, s);
    c.toffoli(b, s, carry);
    c.cnot(a, carry);
    c.cnot(b, s);
    c.cnot(a, b);
    c.cnot(a, s);
}

std::vector<AdderStep> hamming_weight_schedule(int M, std::vector<int> *outputs) {
    if (M < 1) {
        throw std::invalid_argument("hamming_weight_schedule: M must be positive");
    }
    std::vector<AdderStep> steps;
    std::vector<std::deque<int>> bucket(1);
    for (int q = 0; q < M; q++) {
        bucket[0].push_back(q);
    }
    int next = M;
    std::vector<int> out;
    for (size_t j = 0; j < bucket.size(); j++) {
        auto carry_to_next = [&](int w) {
            if (bucket.size() == j + 1) {
                bucket.emplace_back();
            }
            bucket[j + 1].push_back(w);
        };
        while (bucket[j].size() >= 3) {
            AdderStep st{true, bucket[j][0], bucket[j][1], bucket[j][2], next++};
            bucket[j].erase(bucket[j].begin(), bucket[j].begin() + 3);
            bucket[j].push_back(st.s);
            carry_to_next(st.carry);
            steps.push_back(st);
        }
        if (bucket[j].size() == 2) {
            AdderStep st{false, bucket[j][0], -1, bucket[j][1], next++};
            bucket[j].clear();
            bucket[j].push_back(st.s);
            carry_to_next(st.carry);
            steps.push_back(st);
        }
        out.push_back(bucket[j].front());
    }
    if (outputs != nullptr) {
        *outputs = out;
    }
    return steps;
}

HammingWeightCircuit build_hamming_weight(int M) {
    if (M < 1 || M > 8) {
        throw std::invalid_argument("build_hamming_weight: M must lie in 1..8");
    }
    HammingWeightCircuit hw;
    std::vector<AdderStep> steps = hamming_weight_schedule(M, &hw.outputs);
    hw.circuit = Circuit(M + int(steps.size()));
    for (int q = 0; q < M; q++) {
        hw.inputs.push_back(q);
    }
    for (const AdderStep &st : steps) {
        if (st.full) {
            add_full_adder(hw.circuit, st.a, st.b, st.s, st.carry);
            hw.full_adders++;
        } else {
            add_half_adder(hw.circuit, st.a, st.s, st.carry);
            hw.half_adders++;
        }
    }
    return hw;
}

HwpCircuit build_hwp(int M, double theta, HwpStrategy strategy) {
    if (M < 1 || M > 5) {
        throw std::invalid_argument("build_hwp: M must lie in 1..5");
    }
    HammingWeightCircuit hw = build_hamming_weight(M);
    const int k = int(hw.outputs.size());
    const int base = hw.circuit.n_qubits();
    const bool cat = strategy == HwpStrategy::Catalyzed;
    HwpCircuit out;
    out.strategy = strategy;
    out.theta = theta;
    out.inputs = hw.inputs;
    out.circuit = Circuit(base + (cat ? 2 * k : 0));
    Circuit &c = out.circuit;
    if (!cat) {
        c.append(hw.circuit, Role::Compute);
        for (int j = 0; j < k; j++) {
            c.rz(hw.outputs[j], std::ldexp(theta, j));
        }
        c.append(hw.circuit.inverse(), Role::Uncompute);
        return out;
    }

    // Catalyst y (k qubits) holds sum_y e^{-i theta y}|y>; carries a_1..a_k.
    std::vector<int> y(k), a(k + 1, -1);
    for (int j = 0; j < k; j++) {
        y[j] = base + j;
        a[j + 1] = base + k + j;
    }
    out.catalyst = y;
    for (int j = 0; j < k; j++) {
        c.add(GateKind::H, {y[j]}, 0, Role::Prologue);
        c.add(GateKind::Rz, {y[j]}, -std::ldexp(theta, j), Role::Prologue);
    }
    c.append(hw.circuit, Role::Compute);
    const std::vector<int> &h = hw.outputs;

    // Carry chain of h + y; the carry out a_k picks up the one rotation.
    Circuit adder(c.n_qubits());
    adder.toffoli(h[0], y[0], a[1]);
    for (int j = 1; j < k; j++) {
        adder.cnot(a[j], h[j]);
        adder.cnot(a[j], y[j]);
        adder.toffoli(h[j], y[j], a[j + 1]);
        adder.cnot(a[j], a[j + 1]);
    }
    c.append(adder, Role::Compute);
    c.rz(a[k], std::ldexp(theta, k));
    // Unwind the carries, leaving the sum in y.
    for (int j = k - 1; j >= 1; j--) {
        c.add(GateKind::CNOT, {a[j], a[j + 1]}, 0, Role::Uncompute);
        c.add(GateKind::Toffoli, {h[j], y[j], a[j + 1]}, 0, Role::Uncompute);
        c.add(GateKind::CNOT, {a[j], h[j]}, 0, Role::Uncompute);
        c.add(GateKind::CNOT, {h[j], y[j]}, 0, Role::Uncompute);
    }
    c.add(GateKind::Toffoli, {h[0], y[0], a[1]}, 0, Role::Uncompute);
    c.add(GateKind::CNOT, {h[0], y[0]}, 0, Role::Uncompute);
    c.append(hw.circuit.inverse(), Role::Uncompute);
    return out;
}

std::vector<cplx> catalyst_state(const HwpCircuit &h) {
    const int k = int(h.catalyst.size());
    std::vector<cplx> st(std::size_t(1) << k);
    for (std::size_t v = 0; v < st.size(); v++) {
        cplx amp = 1;
        for (int j = 0; j < k; j++) {
            // Rz(phi)|+> with phi = -2^j theta.
            const double phi = -std::ldexp(h.theta, j);
            amp *= std::polar(1 / std::sqrt(2.0), ((v >> j) & 1) ? phi / 2 : -phi / 2);
        }
        st[v] = amp;
    }
    return st;
}

namespace {

std::size_t place(std::size_t v, const std::vector<int> &qubits) {
    std::size_t idx = 0;
    for (size_t j = 0; j < qubits.size(); j++) {
        if ((v >> j) & 1) {
            idx |= std::size_t(1) << qubits[j];
        }
    }
    return idx;
}

}  // namespace

Eigen::MatrixXcd hwp_induced_unitary(const HwpCircuit &h) {
    const int M = int(h.inputs.size());
    const std::size_t dim = std::size_t(1) << M;
    const std::vector<cplx> cat = catalyst_state(h);
    Eigen::MatrixXcd U(dim, dim);
    for (std::size_t x = 0; x < dim; x++) {
        StateVector sv(h.circuit.n_qubits(), place(x, h.inputs));
        sv.apply(h.circuit);
        const auto &amp = sv.amplitudes();
        for (std::size_t xp = 0; xp < dim; xp++) {
            const std::size_t bx = place(xp, h.inputs);
            if (h.catalyst.empty()) {
                U(xp, x) = amp[bx];
                continue;
            }
            cplx s = 0;
            for (std::size_t v = 0; v < cat.size(); v++) {
                s += std::conj(cat[v]) * amp[bx | place(v, h.catalyst)];
            }
            U(xp, x) = s;
        }
    }
    return U;
}

double catalyst_fidelity(const HwpCircuit &h, const std::vector<cplx> &input) {
    const int M = int(h.inputs.size());
    if (input.size() != (std::size_t(1) << M)) {
        throw std::invalid_argument("catalyst_fidelity: input size mismatch");
    }
    if (h.catalyst.empty()) {
        return 1.0;
    }
    StateVector sv(h.circuit.n_qubits());
    auto &amp = sv.amplitudes();
    amp[0] = 0;
    for (std::size_t x = 0; x < input.size(); x++) {
        amp[place(x, h.inputs)] = input[x];
    }
    sv.apply(h.circuit);
    const std::vector<cplx> cat = catalyst_state(h);
    std::size_t cat_mask = place(cat.size() - 1, h.catalyst);
    double fid = 0;
    for (std::size_t rest = 0; rest < amp.size(); rest++) {
        if (rest & cat_mask) {
            continue;
        }
        cplx s = 0;
        for (std::size_t v = 0; v < cat.size(); v++) {
            s += std::conj(cat[v]) * amp[rest | place(v, h.catalyst)];
        }
        fid += std::norm(s);
    }
    return fid;
}

Circuit build_fswap(int n_qubits, int i, int j) {
    if (std::abs(i - j) != 1) {
        throw std::invalid_argument("build_fswap: modes must be adjacent; compose long-range swaps");
    }
    Circuit c(n_qubits);
    c.swap(i, j);
    c.cz(i, j);
    return c;
}

Circuit build_long_range_fswap(int n_qubits, int i, int k) {
    if (k < 1) {
        throw std::invalid_argument("build_long_range_fswap: k must be positive");
    }
    Circuit c(n_qubits);
    // Move mode i up to i+k, then bring the displaced mode down to i.
    for (int m = i; m < i + k; m++) {
        c.append(build_fswap(n_qubits, m, m + 1));
    }
    for (int m = i + k - 2; m >= i; m--) {
        c.append(build_fswap(n_qubits, m, m + 1));
    }
    return c;
}

namespace {

enum class Pauli { X, Y };

// exp(i alpha P_a P_b) with the Z-rotation supplied by `core`.
template <typename Core>
void pauli_pair_rotation(Circuit &c, int qa, Pauli pa, int qb, Pauli pb, Core core) {
    auto to_z = [&](int q, Pauli p) {
        if (p == Pauli::Y) {
            c.sdg(q);
        }
        c.h(q);
    };
    auto from_z = [&](int q, Pauli p) {
        c.h(q);
        if (p == Pauli::Y) {
            c.s(q);
        }
    };
    to_z(qa, pa);
    to_z(qb, pb);
    c.cnot(qa, qb);
    core(qb);
    c.cnot(qa, qb);
    from_z(qa, pa);
    from_z(qb, pb);
}

}  // namespace

Circuit build_two_site_fourier(int n_qubits, int j) {
    Circuit c(n_qubits);
    const int k = j + 1;
    c.z(k);
    // exp(i pi/8 Y_j X_k): Rz(-pi/4) equals Tdg up to a phase that the
    // second rotation cancels.
    pauli_pair_rotation(c, j, Pauli::Y, k, Pauli::X, [&](int q) { c.tdg(q); });
    // exp(-i pi/8 X_j Y_k).
    pauli_pair_rotation(c, j, Pauli::X, k, Pauli::Y, [&](int q) { c.t(q); });
    return c;
}

Circuit build_plaquette_evolution(double theta) {
    const int n = 4;
    Circuit half(n);
    // f_{2,3} F_{1,2} F_{3,4} f_{1,2}, rightmost first.
    half.append(build_fswap(n, 0, 1));
    half.append(build_two_site_fourier(n, 2));
    half.append(build_two_site_fourier(n, 0));
    half.append(build_fswap(n, 1, 2));

    Circuit c(n);
    c.append(half.inverse());
    // exp(i theta (X2 X3 + Y2 Y3)) as two same-angle Z rotations.
    pauli_pair_rotation(c, 1, Pauli::X, 2, Pauli::X, [&](int q) { c.rz(q, -2 * theta); });
    pauli_pair_rotation(c, 1, Pauli::Y, 2, Pauli::Y, [&](int q) { c.rz(q, -2 * theta); });
    c.append(half);
    return c;
}

Eigen::MatrixXcd plaquette_k(const FermionOracle &f) {
    if (f.n_modes() < 4) {
        throw std::invalid_argument("plaquette_k needs four modes");
    }
    Eigen::MatrixXcd b = (f.a(0) + f.a(1) + f.a(2) + f.a(3)) / 2.0;
    Eigen::MatrixXcd c = (f.a(0) - f.a(1) + f.a(2) - f.a(3)) / 2.0;
    return 2.0 * (b.adjoint() * b - c.adjoint() * c);
}

std::vector<double> fixed_angles(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    for (int i = 0; i < count; i++) {
        const double u = double(rng() >> 11) * 0x1.0p-53;
        out.push_back(kPi * (2 * u - 1));
    }
    return out;
}

}  // namespace hre::circuitlab

namespace hre::circuitlab {

namespace {

double max_abs(const Eigen::MatrixXcd &A) { return A.cwiseAbs().maxCoeff(); }

// Conjugation U A U^dag.
Eigen::MatrixXcd conj_by(const Eigen::MatrixXcd &U, const Eigen::MatrixXcd &A) {
    return U * A * U.adjoint();
}

CheckResult check(std::string name, double dev, double tol) {
    return CheckResult{std::move(name), dev, tol, dev <= tol};
}

Eigen::MatrixXcd weight_phase(int M, double theta) {
    const Eigen::Index dim = Eigen::Index(1) << M;
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; x++) {
        // Product of Rz(theta) on every target.
        int w = std::popcount(std::uint64_t(x));
        D(x, x) = std::polar(1.0, theta * (w - M / 2.0));
    }
    return D;
}

}  // namespace

std::vector<CheckResult> run_verification_suite() {
    std::vector<CheckResult> out;
    const double tol = 1e-10;
    const double exact = 1e-12;

    {
        FermionOracle f(5);
        out.push_back(check("oracle/car", f.car_deviation(), 1e-12));
    }

    {
        FermionOracle f(4);
        double dev = 0;
        for (int i = 0; i + 1 < 4; i++) {
            Eigen::MatrixXcd U = unitary(build_fswap(4, i, i + 1));
            dev = std::max(dev, max_abs(conj_by(U, f.a(i + 1)) - f.a(i)));
            dev = std::max(dev, max_abs(conj_by(U, f.a(i)) - f.a(i + 1)));
            for (int m = 0; m < 4; m++) {
                if (m != i && m != i + 1) {
                    dev = std::max(dev, max_abs(conj_by(U, f.a(m)) - f.a(m)));
                }
            }
        }
        out.push_back(check("fswap/adjacent", dev, exact));
    }

    {
        FermionOracle f(5);
        double dev = 0;
        long swaps_ok = 1;
        for (int k = 1; k <= 4; k++) {
            for (int i = 0; i + k < 5; i++) {
                Circuit c = build_long_range_fswap(5, i, k);
                if (long(c.gates().size()) != 2 * (2 * k - 1)) {
                    swaps_ok = 0;
                }
                Eigen::MatrixXcd U = unitary(c);
                dev = std::max(dev, max_abs(conj_by(U, f.a(i + k)) - f.a(i)));
                dev = std::max(dev, max_abs(conj_by(U, f.a(i)) - f.a(i + k)));
                for (int m = 0; m < 5; m++) {
                    if (m != i && m != i + k) {
                        dev = std::max(dev, max_abs(conj_by(U, f.a(m)) - f.a(m)));
                    }
                }
            }
        }
        out.push_back(check("fswap/long-range", dev, exact));
        out.push_back(check("fswap/long-range-count", swaps_ok ? 0.0 : 1.0, 0.0));
    }

    {
        FermionOracle f(4);
        double dev = 0;
        const double r = 1 / std::sqrt(2.0);
        for (int j = 0; j + 1 < 4; j++) {
            Circuit c = build_two_site_fourier(4, j);
            Eigen::MatrixXcd U = unitary(c);
            dev = std::max(dev, max_abs(conj_by(U, f.adag(j)) - r * (f.adag(j) + f.adag(j + 1))));
            dev = std::max(dev, max_abs(conj_by(U, f.adag(j + 1)) - r * (f.adag(j) - f.adag(j + 1))));
            dev = std::max(dev, std::abs(U(0, 0) - 1.0));
            Tally t = c.tally();
            if (t.t != 2 || t.toffoli != 0 || t.rz != 0) {
                dev = std::max(dev, 1.0);
            }
        }
        out.push_back(check("fourier/two-site", dev, exact));
    }

    {
        FermionOracle f(4);
        const Eigen::MatrixXcd K = plaquette_k(f);
        double dev = 0;
        for (double theta : fixed_angles(5, 11)) {
            Circuit c = build_plaquette_evolution(theta);
            dev = std::max(dev, max_abs(unitary(c) - expi_hermitian(K, theta)));
            Tally t = c.tally();
            if (t.t != 8 || t.rz != 2 || t.toffoli != 0) {
                dev = std::max(dev, 1.0);
            }
        }
        out.push_back(check("plaquette/exp-iK", dev, tol));
    }

    {
        double dev = 0;
        for (int M = 1; M <= 8; M++) {
            HammingWeightCircuit hw = build_hamming_weight(M);
            for (std::uint64_t x = 0; x < (std::uint64_t(1) << M); x++) {
                StateVector sv(hw.circuit.n_qubits(), x);
                sv.apply(hw.circuit);
                const auto &amp = sv.amplitudes();
                auto it = std::max_element(amp.begin(), amp.end(),
                                           [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
                const std::size_t idx = std::size_t(it - amp.begin());
                dev = std::max(dev, std::abs(std::abs(*it) - 1.0));
                int w = 0;
                for (size_t j = 0; j < hw.outputs.size(); j++) {
                    w += int((idx >> hw.outputs[j]) & 1) << j;
                }
                if (w != std::popcount(x)) {
                    dev = std::max(dev, 1.0);
                }
            }
            if (hw.half_adders + hw.full_adders != hamming_adders(M) ||
                hw.circuit.tally().toffoli != hamming_adders(M)) {
                dev = std::max(dev, 1.0);
            }
        }
        out.push_back(check("hamming-weight/exhaustive", dev, tol));
    }

    for (HwpStrategy s : {HwpStrategy::Baseline, HwpStrategy::Catalyzed}) {
        const std::string tag = s == HwpStrategy::Baseline ? "baseline" : "catalyzed";
        double dev = 0, fid_dev = 0, tally_dev = 0;
        for (int M = 1; M <= 5; M++) {
            for (double theta : fixed_angles(10, 100 + M)) {
                HwpCircuit h = build_hwp(M, theta, s);
                dev = std::max(dev, phase_aligned_deviation(hwp_induced_unitary(h), weight_phase(M, theta)));
                const std::size_t dim = std::size_t(1) << M;
                std::vector<double> re = fixed_angles(int(2 * dim), 7 + M);
                std::vector<cplx> in(dim);
                double nrm = 0;
                for (std::size_t x = 0; x < dim; x++) {
                    in[x] = cplx(re[2 * x], re[2 * x + 1]);
                    nrm += std::norm(in[x]);
                }
                for (cplx &a : in) {
                    a /= std::sqrt(nrm);
                }
                fid_dev = std::max(fid_dev, std::abs(1.0 - catalyst_fidelity(h, in)));
                const Tally t = h.circuit.tally();
                const CostVector want = hwp_cost(M, s);
                if (double(t.toffoli) != want.toffoli || t.rz != want.rz || t.t != 0) {
                    tally_dev = 1.0;
                }
            }
        }
        out.push_back(check("hwp/" + tag + "/unitary", dev, tol));
        out.push_back(check("hwp/" + tag + "/catalyst-fidelity", fid_dev, exact));
        out.push_back(check("hwp/" + tag + "/tally", tally_dev, 0.0));
    }

    {
        // Every gadget is unitary and preserves the norm of a spread state.
        std::vector<Circuit> all;
        all.push_back(build_fswap(4, 1, 2));
        all.push_back(build_long_range_fswap(5, 0, 4));
        all.push_back(build_two_site_fourier(2, 0));
        all.push_back(build_plaquette_evolution(0.37));
        all.push_back(build_hamming_weight(5).circuit);
        all.push_back(build_hwp(3, 1.234, HwpStrategy::Baseline).circuit);
        all.push_back(build_hwp(3, 1.234, HwpStrategy::Catalyzed).circuit);
        double udev = 0, ndev = 0;
        for (const Circuit &c : all) {
            Eigen::MatrixXcd U = unitary(c);
            udev = std::max(udev, max_abs(U.adjoint() * U - Eigen::MatrixXcd::Identity(U.rows(), U.cols())));
            StateVector sv(c.n_qubits());
            std::vector<double> re = fixed_angles(int(2 * sv.amplitudes().size()), 5);
            double nrm = 0;
            for (std::size_t k = 0; k < sv.amplitudes().size(); k++) {
                sv.amplitudes()[k] = cplx(re[2 * k], re[2 * k + 1]);
                nrm += std::norm(sv.amplitudes()[k]);
            }
            for (cplx &a : sv.amplitudes()) {
                a /= std::sqrt(nrm);
            }
            for (const Gate &g : c.gates()) {
                sv.apply(g);
                ndev = std::max(ndev, std::abs(sv.norm_squared() - 1.0));
            }
        }
        out.push_back(check("circuits/unitary", udev, tol));
        out.push_back(check("circuits/norm", ndev, exact));
    }
    return out;
}

}  // namespace hre::circuitlab
