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
#include <numbers>

#include "hubbard_re/optimize.hpp"
#include "hubbard_re/trotter_cost.hpp"

using namespace hre;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(TrotterCost, Queries) {
    EXPECT_NEAR(queries(0.6, 0.02, 0.3264), 609.6, 0.05);
    EXPECT_NEAR(queries(0.5, 0.76 * std::numbers::pi, 2.0), 1.0, 1e-15);
    EXPECT_NEAR(queries(0.6, 0.04, 0.3264) * 2, queries(0.6, 0.02, 0.3264), 1e-12);
    EXPECT_THROW(queries(0.6, 0, 0.3), std::invalid_argument);
    EXPECT_THROW(queries(1.0, 0.02, 0.3), std::invalid_argument);
}

TEST(TrotterCost, FermiHubbardStep) {
    CostVector cat = fh_step_cost(8, 1, TrotterStrategy::Catalyzed);
    EXPECT_EQ(cat.toffoli, 350);
    EXPECT_EQ(cat.rz, 5);
    EXPECT_EQ(cat.t_gates, 12 * 64);
    CostVector base = fh_step_cost(8, 1, TrotterStrategy::Baseline);
    EXPECT_EQ(base.toffoli, 315);
    EXPECT_EQ(base.rz, 35);
    EXPECT_THROW(fh_step_cost(8, 0, TrotterStrategy::Catalyzed), std::invalid_argument);
    EXPECT_EQ(catalyst_rotations(ModelKind::FermiHubbard, 8, TrotterStrategy::Catalyzed), 2 * 6 + 4);
    EXPECT_EQ(catalyst_rotations(ModelKind::FermiHubbard, 8, TrotterStrategy::Baseline), 0);
}

TEST(TrotterCost, CuprateStep) {
    EXPECT_EQ(cuprate_step_cost(8, 1, TrotterStrategy::Catalyzed).toffoli, 1710);
    EXPECT_EQ(cuprate_step_cost(4, 1, TrotterStrategy::Catalyzed).t_gates, 512);
    // r-proportional parts double with r.
    const CostVector r1 = cuprate_step_cost(8, 1, TrotterStrategy::Catalyzed);
    const CostVector r2 = cuprate_step_cost(8, 2, TrotterStrategy::Catalyzed);
    const CostVector r3 = cuprate_step_cost(8, 3, TrotterStrategy::Catalyzed);
    EXPECT_EQ(r3.toffoli - r2.toffoli, r2.toffoli - r1.toffoli);
    EXPECT_EQ(r3.t_gates - r2.t_gates, r2.t_gates - r1.t_gates);
    EXPECT_EQ(catalyst_rotations(ModelKind::Cuprate, 8, TrotterStrategy::Catalyzed), 7 + 8 + 8 + 7);
    EXPECT_EQ(cuprate_step_cost(8, 1, TrotterStrategy::Catalyzed).rz, 17);
}

TEST(TrotterCost, PnictideStepPrintedLayers) {
    TrotterOptions printed;
    printed.printed_pnictide_layers = true;
    CostVector c = pnictide_step_cost(4, 1, TrotterStrategy::Catalyzed, printed);
    EXPECT_EQ(c.toffoli, 967);
    EXPECT_EQ(c.t_gates, 0);
    EXPECT_EQ(c.rz, 19);
    EXPECT_THROW(pnictide_step_cost(4, 0, TrotterStrategy::Catalyzed), std::invalid_argument);
    EXPECT_EQ(catalyst_rotations(ModelKind::Pnictide, 4, TrotterStrategy::Catalyzed), 6 + 6 + 8 + 7 + 6 + 6);
}

TEST(TrotterCost, PnictideStepDefaultLayers) {
    // 20r applications of the 2L^2 layers.
    CostVector c = pnictide_step_cost(4, 1, TrotterStrategy::Catalyzed);
    EXPECT_EQ(c.toffoli, 8 * 70 + 20 * 37);
    EXPECT_EQ(c.rz, 28);
}

TEST(TrotterCost, BatchedUsesHalfLatticeBatches) {
    EXPECT_EQ(batch_size(TrotterStrategy::BatchedBaseline, 8), 32);
    EXPECT_EQ(batch_size(TrotterStrategy::Catalyzed, 8), 0);
    CostVector b = fh_step_cost(8, 1, TrotterStrategy::BatchedBaseline);
    EXPECT_EQ(b.toffoli, 5 * 62);
    EXPECT_EQ(b.rz, 5 * 12);
    CostVector bc = fh_step_cost(8, 1, TrotterStrategy::BatchedCatalyzed);
    EXPECT_EQ(bc.toffoli, 5 * 2 * (31 + 6));
    EXPECT_EQ(bc.rz, 10);
}

TEST(TrotterCost, SynthesisCounts) {
    EXPECT_EQ(nt1_multiplier(ModelKind::FermiHubbard, 8, TrotterStrategy::Catalyzed), 15);
    EXPECT_EQ(nt1_multiplier(ModelKind::FermiHubbard, 8, TrotterStrategy::Baseline), 0);

    // log argument 1 leaves 4.86 per rotation.
    // Five rotations per step and a budget share of 10.
    TrotterBudget b{100.0, 0.5, 0.5, 1e-3, 0.2};
    auto [nt1, nt2] = synthesis_t_counts(ModelKind::FermiHubbard, 8, 1, b, TrotterStrategy::Catalyzed);
    (void)nt1;
    EXPECT_NEAR(nt2, 5 * 4.86, 1e-12);

    TrotterBudget b1{0.3, 0.01, 0.6, 0.001, 0.05};
    TrotterBudget b2 = b1;
    b2.z *= 2;
    const double a = synthesis_t_counts(ModelKind::FermiHubbard, 8, 3, b1, TrotterStrategy::Catalyzed).first;
    const double c = synthesis_t_counts(ModelKind::FermiHubbard, 8, 3, b2, TrotterStrategy::Catalyzed).first;
    EXPECT_NEAR(a - c, 0.53 * 15, 1e-10);
}

TEST(TrotterCost, QubitItemization) {
    EXPECT_EQ(total_qubits(ModelKind::FermiHubbard, 8, TrotterStrategy::BatchedBaseline), 161);
    EXPECT_EQ(total_qubits(ModelKind::FermiHubbard, 8, TrotterStrategy::Baseline), 193);
    EXPECT_EQ(total_qubits(ModelKind::FermiHubbard, 8, TrotterStrategy::Catalyzed), 216);
    EXPECT_EQ(total_qubits(ModelKind::FermiHubbard, 8, TrotterStrategy::BatchedCatalyzed), 181);
    EXPECT_EQ(total_qubits(ModelKind::Pnictide, 4, TrotterStrategy::Catalyzed), 175);
    EXPECT_EQ(total_qubits(ModelKind::Cuprate, 16, TrotterStrategy::Catalyzed), 1073);
    for (ModelKind k : {ModelKind::FermiHubbard, ModelKind::Cuprate, ModelKind::Pnictide}) {
        for (TrotterStrategy s : kAllStrategies) {
            EXPECT_GE(total_qubits(k, 8, s), system_qubits(k, 8));
        }
    }
}

TEST(TrotterCost, EvaluateIdentity) {
    const ModelSpec spec = default_spec(ModelKind::Cuprate, 8);
    const TrotterBudget b{extensive_error(8), 0.02, 0.6, 0.002, 0.03};
    for (TrotterStrategy s : kAllStrategies) {
        TrotterBudget bs = b;
        if (!is_catalyzed(s)) {
            bs.z = 0;
        }
        auto e = evaluate_trotter(spec, s, bs, trotter_w(spec), {});
        EXPECT_NEAR(e.total_toffoli, e.n_queries * (e.n_toffoli_per_u + (e.n_t_direct + e.n_t1 + e.n_t2) / 2),
                    1e-9 * e.total_toffoli);
        EXPECT_EQ(e.n_toffoli_per_u, std::floor(e.n_toffoli_per_u));
    }
}

TEST(TrotterCost, AmortizedCatalystIsCheaper) {
    const ModelSpec spec = default_spec(ModelKind::FermiHubbard, 8);
    TrotterOptions am;
    am.amortize_catalyst = true;
    const TrotterBudget b{extensive_error(8), 0.01, 0.6, 0.001, 0.05};
    auto plain = evaluate_trotter(spec, TrotterStrategy::Catalyzed, b, trotter_w(spec));
    auto amort = evaluate_trotter(spec, TrotterStrategy::Catalyzed, b, trotter_w(spec), am);
    EXPECT_NEAR(plain.total_toffoli - amort.total_toffoli, (plain.n_queries - 1) * plain.n_t1 / 2,
                1e-9 * plain.total_toffoli);
}

TEST(TrotterOptimize, FermiHubbardL8) {
    auto e = optimize_trotter(default_spec(ModelKind::FermiHubbard, 8), TrotterStrategy::Catalyzed);
    EXPECT_LT(rel(e.total_toffoli, 8.40e5), 0.05);
    // Near the reported typical region.
    EXPECT_GT(e.budget.x, 1e-3);
    EXPECT_LT(e.budget.x, 0.05);
    EXPECT_GT(e.budget.y, 0.5);
    EXPECT_LT(e.budget.y, 0.8);
    EXPECT_GT(e.budget.z, 1e-4);
    EXPECT_LT(e.budget.z, 1e-2);
    EXPECT_LT(e.budget.tau, tau_max(e.W));
    EXPECT_EQ(e.total_qubits, 216);
}

TEST(TrotterOptimize, CuprateL16BatchedCatalyzed) {
    // Batched columns are an extrapolation; the acceptance tolerance is 15%.
    auto e = optimize_trotter(default_spec(ModelKind::Cuprate, 16), TrotterStrategy::BatchedCatalyzed);
    EXPECT_LT(rel(e.total_toffoli, 5.45e6), 0.15);
}

TEST(TrotterOptimize, PnictideL32Catalyzed) {
    auto e = optimize_trotter(default_spec(ModelKind::Pnictide, 32), TrotterStrategy::Catalyzed);
    EXPECT_LT(rel(e.total_toffoli, 3.08e7), 0.05);
    EXPECT_EQ(e.total_qubits, 8281);
}

TEST(TrotterOptimize, TauBelowBoundAndDeterministic) {
    for (ModelKind k : {ModelKind::FermiHubbard, ModelKind::Cuprate, ModelKind::Pnictide}) {
        for (TrotterStrategy s : kAllStrategies) {
            const ModelSpec spec = default_spec(k, 8);
            auto a = optimize_trotter(spec, s);
            auto b = optimize_trotter(spec, s);
            EXPECT_LT(a.budget.tau, tau_max(a.W));
            EXPECT_GE(a.r, 1);
            EXPECT_EQ(a.total_toffoli, b.total_toffoli);
            EXPECT_EQ(a.budget.x, b.budget.x);
            EXPECT_EQ(a.budget.tau, b.budget.tau);
        }
    }
}

TEST(TrotterOptimize, SeedNeverBeatsGridBound) {
    // A different seed may land elsewhere but never above the coarse grid.
    const ModelSpec spec = default_spec(ModelKind::FermiHubbard, 8);
    TrotterOptions o;
    o.seed = 42;
    auto a = optimize_trotter(spec, TrotterStrategy::Baseline);
    auto b = optimize_trotter(spec, TrotterStrategy::Baseline, o);
    EXPECT_LT(rel(a.total_toffoli, b.total_toffoli), 0.01);
}

TEST(TrotterOptimize, InfeasibleAndInvalid) {
    ModelSpec zero = default_spec(ModelKind::Cuprate, 8);
    // W underflows to zero.
    zero.c = Couplings{};
    zero.c.t = 1e-300;
    EXPECT_THROW(optimize_trotter(zero, TrotterStrategy::Catalyzed), InfeasibleError);
    EXPECT_THROW(optimize_trotter(default_spec(ModelKind::Cuprate, 6), TrotterStrategy::Catalyzed),
                 std::invalid_argument);
    EXPECT_THROW(optimize_trotter(default_spec(ModelKind::FermiHubbard, 34), TrotterStrategy::Catalyzed),
                 std::out_of_range);
}

TEST(TrotterStrategyNames, RoundTrip) {
    for (TrotterStrategy s : kAllStrategies) {
        EXPECT_EQ(parse_strategy(strategy_name(s)), s);
    }
    EXPECT_THROW(parse_strategy("fast"), std::invalid_argument);
}
