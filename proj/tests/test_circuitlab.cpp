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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "hubbard_re/circuitlab.hpp"

using namespace hre;
using namespace hre::circuitlab;

namespace {

Eigen::MatrixXcd diag_weight_phase(int M, double theta) {
    const Eigen::Index dim = Eigen::Index(1) << M;
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; x++) {
        D(x, x) = std::polar(1.0, theta * std::popcount(std::uint64_t(x)));
    }
    return D;
}

std::uint64_t read_register(const StateVector &sv, const std::vector<int> &qs) {
    const auto &amp = sv.amplitudes();
    for (std::size_t b = 0; b < amp.size(); b++) {
        if (std::abs(amp[b]) > 0.5) {
            std::uint64_t v = 0;
            for (std::size_t j = 0; j < qs.size(); j++) {
                v |= ((b >> qs[j]) & 1u) << j;
            }
            return v;
        }
    }
    return ~0ull;
}

}  // namespace

TEST(CircuitLab, SuitePasses) {
    auto checks = run_verification_suite();
    EXPECT_GE(checks.size(), 15u);
    for (const CheckResult &c : checks) {
        EXPECT_TRUE(c.pass) << c.name << " dev " << c.deviation << " tol " << c.tolerance;
    }
}

TEST(CircuitLab, GateBasics) {
    Circuit c(2);
    c.h(0).cnot(0, 1);
    StateVector sv(2);
    sv.apply(c);
    EXPECT_NEAR(std::abs(sv.amplitudes()[0]), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(std::abs(sv.amplitudes()[3]), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(sv.norm_squared(), 1.0, 1e-15);

    Circuit r(1);
    r.rz(0, 0.3).t(0).s(0);
    EXPECT_LT(phase_aligned_deviation(unitary(r) * unitary(r.inverse()), Eigen::MatrixXcd::Identity(2, 2)), 1e-14);
    const Tally t = r.tally();
    EXPECT_EQ(t.rz, 1);
    EXPECT_EQ(t.t, 1);
    EXPECT_EQ(t.clifford, 1);
}

TEST(CircuitLab, RangeErrors) {
    Circuit c(2);
    EXPECT_THROW(c.x(2), std::invalid_argument);
    EXPECT_THROW(c.cnot(0, 0), std::invalid_argument);
    EXPECT_THROW(Circuit(0), std::invalid_argument);
    EXPECT_THROW(Circuit(kMaxQubits + 1), std::invalid_argument);
    EXPECT_THROW(build_hamming_weight(0), std::invalid_argument);
    EXPECT_THROW(build_hwp(6, 0.1, HwpStrategy::Baseline), std::invalid_argument);
}

TEST(HammingWeight, AllOnesEight) {
    HammingWeightCircuit hw = build_hamming_weight(8);
    EXPECT_EQ(hw.circuit.tally().toffoli, 7);
    std::uint64_t basis = 0;
    for (int q : hw.inputs) {
        basis |= 1ull << q;
    }
    StateVector sv(hw.circuit.n_qubits(), basis);
    sv.apply(hw.circuit);
    EXPECT_EQ(read_register(sv, hw.outputs), 8u);
    EXPECT_EQ(hw.outputs.size(), 4u);
}

TEST(HammingWeight, SingleBitIsIdentity) {
    HammingWeightCircuit hw = build_hamming_weight(1);
    EXPECT_EQ(hw.circuit.gates().size(), 0u);
    EXPECT_EQ(hw.outputs, hw.inputs);
}

TEST(HammingWeight, ScheduleCountMatchesFormula) {
    for (int M = 1; M <= 4096; M++) {
        std::vector<int> outs;
        auto sched = hamming_weight_schedule(M, &outs);
        ASSERT_EQ(std::int64_t(sched.size()), M - std::popcount(unsigned(M))) << M;
        ASSERT_EQ(int(outs.size()), std::bit_width(unsigned(M))) << M;
    }
}

TEST(Hwp, BaselineMatchesDiagonal) {
    const double theta = std::numbers::pi / 7;
    HwpCircuit h = build_hwp(2, theta, HwpStrategy::Baseline);
    EXPECT_LT(phase_aligned_deviation(hwp_induced_unitary(h), diag_weight_phase(2, theta)), 1e-12);
    EXPECT_EQ(h.circuit.tally().rz, 2);
    EXPECT_EQ(h.circuit.tally().toffoli, 1);
}

TEST(Hwp, ZeroAngleIsIdentity) {
    for (HwpStrategy s : {HwpStrategy::Baseline, HwpStrategy::Catalyzed}) {
        HwpCircuit h = build_hwp(4, 0.0, s);
        EXPECT_LT(phase_aligned_deviation(hwp_induced_unitary(h), Eigen::MatrixXcd::Identity(16, 16)), 1e-12);
    }
}

TEST(Hwp, CatalystIsReturned) {
    HwpCircuit h = build_hwp(3, 1.234, HwpStrategy::Catalyzed);
    EXPECT_EQ(h.catalyst.size(), 2u);
    EXPECT_EQ(h.circuit.tally().rz, 1);
    std::vector<cplx> in(8, cplx(1 / std::sqrt(8.0), 0));
    EXPECT_NEAR(catalyst_fidelity(h, in), 1.0, 1e-12);
    EXPECT_LT(phase_aligned_deviation(hwp_induced_unitary(h), diag_weight_phase(3, 1.234)), 1e-12);
    EXPECT_THROW(catalyst_fidelity(h, std::vector<cplx>(4)), std::invalid_argument);
}

TEST(Fswap, BasisAction) {
    const Circuit f = build_fswap(2, 0, 1);
    StateVector a(2, 0b01);
    a.apply(f);
    EXPECT_NEAR(std::abs(a.amplitudes()[0b10] - cplx(1, 0)), 0, 1e-15);
    StateVector b(2, 0b11);
    b.apply(f);
    EXPECT_NEAR(std::abs(b.amplitudes()[0b11] - cplx(-1, 0)), 0, 1e-15);
    EXPECT_LT(phase_aligned_deviation(unitary(f) * unitary(f), Eigen::MatrixXcd::Identity(4, 4)), 1e-15);
    EXPECT_THROW(build_fswap(4, 0, 2), std::invalid_argument);
}

TEST(Fswap, LongRangeCost) {
    Circuit c = build_long_range_fswap(5, 0, 3);
    long swaps = 0;
    for (const Gate &g : c.gates()) {
        swaps += g.kind == GateKind::SWAP;
    }
    EXPECT_EQ(swaps, 5);
    // Only modes 0 and 3 are exchanged; the fermionic sign picks up modes 1 and 2.
    FermionOracle f(5);
    Eigen::MatrixXcd U = unitary(c);
    EXPECT_LT((U * f.a(0) * U.adjoint() - f.a(3)).norm(), 1e-12);
}

TEST(Fourier, FixesVacuum) {
    Circuit F = build_two_site_fourier(2, 0);
    StateVector sv(2);
    sv.apply(F);
    EXPECT_NEAR(std::abs(sv.amplitudes()[0]), 1.0, 1e-15);
}

TEST(Plaquette, ZeroAngleAndExponential) {
    EXPECT_LT(phase_aligned_deviation(unitary(build_plaquette_evolution(0.0)), Eigen::MatrixXcd::Identity(16, 16)),
              1e-12);
    FermionOracle f(4);
    const Eigen::MatrixXcd K = plaquette_k(f);
    EXPECT_LT((K - K.adjoint()).norm(), 1e-14);
    const Circuit c = build_plaquette_evolution(0.37);
    EXPECT_LT(phase_aligned_deviation(unitary(c), expi_hermitian(K, 0.37)), 1e-10);
    const Tally t = c.tally();
    EXPECT_EQ(t.t, 8);
    EXPECT_EQ(t.rz, 2);
}

TEST(FixedAngles, DeterministicAndBounded) {
    auto a = fixed_angles(50, 3);
    auto b = fixed_angles(50, 3);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, fixed_angles(50, 4));
    for (double v : a) {
        EXPECT_LE(std::abs(v), std::numbers::pi);
    }
}
