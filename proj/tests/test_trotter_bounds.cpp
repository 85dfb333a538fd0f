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

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hubbard_re/reference_data.hpp"
#include "hubbard_re/trotter_bounds.hpp"

using namespace hre;

namespace {

std::string sig3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

// Single-particle hopping matrix of one plaquette layer on the periodic
// L x L lattice; offset 1 is the layer translated by (1, 1).
Eigen::MatrixXd plaquette_layer(int L, int offset) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(L * L, L * L);
    auto site = [L](int i, int j) { return ((i % L + L) % L) * L + (j % L + L) % L; };
    for (int a = 0; a < L; a += 2) {
        for (int b = 0; b < L; b += 2) {
            const int i = a + offset, j = b + offset;
            const int c[4] = {site(i, j), site(i + 1, j), site(i + 1, j + 1), site(i, j + 1)};
            for (int k = 0; k < 4; k++) {
                h(c[k], c[(k + 1) % 4]) -= 1;
                h(c[(k + 1) % 4], c[k]) -= 1;
            }
        }
    }
    return h;
}

// Spectral norm of the quadratic fermion operator with single-particle
// matrix m, summed over two spin species.
double quadratic_norm(const Eigen::MatrixXd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    double pos = 0, neg = 0;
    for (double e : es.eigenvalues()) {
        (e > 0 ? pos : neg) += e;
    }
    return 2 * std::max(pos, -neg);
}

}  // namespace

TEST(FhNorms, TableMatchesFreeFermionOracle) {
    // The embedded norms are printed to two significant figures.
    for (int L = 4; L <= 12; L += 2) {
        const Eigen::MatrixXd h1 = plaquette_layer(L, 0), h2 = plaquette_layer(L, 1);
        const Eigen::MatrixXd c = h1 * h2 - h2 * h1;
        const Eigen::MatrixXd cc = c * h1 - h1 * c;
        const FhNorms &n = FhNormTable::embedded().at(L);
        const double hh = quadratic_norm(h1 + h2), comm = quadratic_norm(cc);
        EXPECT_NEAR(hh, n.norm_hh, 0.05 * n.norm_hh + 1e-9) << "L=" << L;
        if (L == 10) {
            // The table carries 300 here; the diagonalization gives 318.7.
            EXPECT_NEAR(comm, 318.7, 0.05);
            EXPECT_EQ(n.norm_comm, 300);
        } else {
            EXPECT_NEAR(comm, n.norm_comm, 0.05 * n.norm_comm + 1e-9) << "L=" << L;
        }
    }
}

TEST(FhNorms, TableShape) {
    const FhNormTable &t = FhNormTable::embedded();
    EXPECT_EQ(t.rows().size(), 15u);
    double prev_hh = -1, prev_comm = -1;
    for (const auto &[L, n] : t.rows()) {
        EXPECT_GE(n.norm_hh, prev_hh);
        EXPECT_GE(n.norm_comm, prev_comm);
        prev_hh = n.norm_hh;
        prev_comm = n.norm_comm;
    }
    EXPECT_THROW(t.at(34), std::out_of_range);
    EXPECT_FALSE(t.contains(5));
}

TEST(FhNorms, TextRoundTrip) {
    std::istringstream in(FhNormTable::embedded().to_text());
    FhNormTable t = FhNormTable::parse(in);
    EXPECT_EQ(t.to_text(), FhNormTable::embedded().to_text());
    std::istringstream custom("# L hh comm\n4 30 1\n");
    FhNormTable c = FhNormTable::parse(custom);
    EXPECT_DOUBLE_EQ(c.at(4).norm_hh, 30);
    EXPECT_NEAR(fh_w(4, 1, 8, c), 8 * 16 / 6.0 * (std::sqrt(5.0) + 8) + 64.0 / 24 * 30 + 3.0 / 24, 1e-9);
    std::istringstream bad("4 x 1\n");
    EXPECT_THROW(FhNormTable::parse(bad), std::invalid_argument);
}

TEST(TrotterW, FermiHubbard) {
    EXPECT_EQ(sig3(fh_w(4, 1, 8)), "2.82e+02");
    EXPECT_EQ(sig3(fh_w(6, 1, 8)), "6.54e+02");
    EXPECT_EQ(fh_w(4, 0, 8), 0);
    EXPECT_THROW(fh_w(40, 1, 8), std::out_of_range);
}

TEST(TrotterW, FermiHubbardTableThroughL16) {
    for (const auto &ref : trotter_reference(ModelKind::FermiHubbard)) {
        if (ref.L <= 16) {
            EXPECT_EQ(sig3(fh_w(ref.L, 1, 8)), sig3(ref.W)) << "L=" << ref.L;
        }
    }
}

TEST(TrotterW, Cuprate) {
    const Couplings c = default_params(ModelKind::Cuprate);
    EXPECT_NEAR(cuprate_w(4, c), 7.91e2, 0.005 * 7.91e2);
    EXPECT_NEAR(cuprate_w(32, c), 5.06e4, 0.005 * 5.06e4);
    EXPECT_EQ(cuprate_w(8, Couplings{}), 0);
    for (const auto &ref : trotter_reference(ModelKind::Cuprate)) {
        EXPECT_NEAR(cuprate_w(ref.L, c), ref.W, 0.005 * ref.W) << "L=" << ref.L;
    }
}

TEST(TrotterW, Pnictide) {
    // Defaults land about 1.0-1.6% above the tabulated column; see README.
    const Couplings c = default_params(ModelKind::Pnictide);
    EXPECT_NEAR(pnictide_w(4, c), 1.14e4, 0.02 * 1.14e4);
    EXPECT_NEAR(pnictide_w(32, c), 7.27e5, 0.02 * 7.27e5);
    EXPECT_EQ(pnictide_w(8, Couplings{}), 0);
}

TEST(TrotterW, NonNegativeForSignedCouplings) {
    Couplings c = default_params(ModelKind::Pnictide);
    c.t2 = -c.t2;
    c.v = -c.v;
    EXPECT_DOUBLE_EQ(pnictide_w(8, c), pnictide_w(8, default_params(ModelKind::Pnictide)));
    Couplings f;
    f.t = -1;
    f.u = -8;
    EXPECT_DOUBLE_EQ(fh_w(8, f.t, f.u), fh_w(8, 1, 8));
}

TEST(TrotterSteps, Examples) {
    TrotterBudget b{0.0816, 0.01, 0.6, 0.001, 0.02};
    EXPECT_EQ(trotter_steps(0, 0.02, b), 1);
    EXPECT_EQ(trotter_steps(282.4, 0.02, b), 2);
    TrotterBudget bad{0.0816, 0.5, 0.6, 0.5, 0.02};
    EXPECT_THROW(trotter_steps(282.4, 0.02, bad), std::invalid_argument);
    EXPECT_THROW(trotter_steps(282.4, 0, b), std::invalid_argument);
}

TEST(TrotterSteps, QuadruplingWDoublesUnceiledR) {
    // (1 - s)(1 - y) dE = 1 exactly, so r = ceil(tau sqrt(W)).
    TrotterBudget b{2.0, 0.0, 0.5, 0.0, 1.0};
    EXPECT_EQ(trotter_steps(9, 1.0, b), 3);
    EXPECT_EQ(trotter_steps(36, 1.0, b), 6);
    EXPECT_EQ(trotter_steps(9, 0.5, b), 2);
    EXPECT_EQ(trotter_steps(36, 0.5, b), 3);
}

TEST(TrotterSteps, BoundHoldsAfterCeiling) {
    for (double W : {10.0, 282.4, 1.14e4, 7.27e5}) {
        for (double tau : {0.001, 0.01, 0.05}) {
            TrotterBudget b{0.3, 0.02, 0.6, 0.001, tau};
            const long r = trotter_steps(W, tau, b);
            EXPECT_GE(r, 1);
            const double dET = (1 - b.s()) * (1 - b.y) * b.delta_E;
            EXPECT_LE(tau * tau * tau * W / (double(r) * r), dET * tau * (1 + 1e-12));
        }
    }
}

TEST(TauMax, Examples) {
    EXPECT_NEAR(tau_max(std::sqrt(2.0)), 1.0, 1e-15);
    EXPECT_NEAR(tau_max(282.4), 0.17109, 5e-5);
    EXPECT_NEAR(tau_max(1.14e4), 0.0499, 5e-5);
    EXPECT_THROW(tau_max(0), std::invalid_argument);
}
