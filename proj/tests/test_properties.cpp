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
#include <random>

#include "hubbard_re/model.hpp"
#include "hubbard_re/primitives.hpp"
#include "hubbard_re/qubitization.hpp"
#include "hubbard_re/trotter_bounds.hpp"
#include "hubbard_re/trotter_cost.hpp"

using namespace hre;

namespace {

constexpr ModelKind kKinds[] = {ModelKind::FermiHubbard, ModelKind::Cuprate, ModelKind::Pnictide};

}  // namespace

TEST(Properties, LambdaIsLinearInCouplings) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> scale(0.05, 20);
    for (int i = 0; i < 100; i++) {
        const double a = scale(rng);
        for (ModelKind k : kKinds) {
            ModelSpec s = default_spec(k, 8);
            ModelSpec t = s;
            t.c = s.c.scaled(a);
            EXPECT_LE(std::abs(lambda(t) - a * lambda(s)), 1e-12 * a * lambda(s));
        }
    }
}

TEST(Properties, WIsCubicInCouplings) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> scale(0.05, 20);
    for (int i = 0; i < 100; i++) {
        const double a = scale(rng);
        for (ModelKind k : kKinds) {
            ModelSpec s = default_spec(k, 8);
            ModelSpec t = s;
            t.c = s.c.scaled(a);
            const double w = trotter_w(s);
            EXPECT_LE(std::abs(trotter_w(t) - a * a * a * w), 1e-12 * a * a * a * w);
        }
    }
}

TEST(Properties, HwpCatalystTrade) {
    // The catalyzed gadget trades all but one rotation for an adder of the
    // same width.
    for (std::int64_t M = 1; M <= 4096; M++) {
        const CostVector b = hwp_cost(M, HwpStrategy::Baseline);
        const CostVector c = hwp_cost(M, HwpStrategy::Catalyzed);
        ASSERT_EQ(b.rz, floor_log2(std::uint64_t(M)) + 1);
        ASSERT_EQ(c.rz, 1);
        ASSERT_EQ(c.toffoli - b.toffoli, double(b.rz));
        ASSERT_EQ(b.toffoli, double(M - popcount(M)));
    }
}

TEST(Properties, CatalyzedLayerNeverWorseWhenRotationsDominate) {
    for (double delta : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10}) {
        const double rus = rus_t_count(delta);
        for (std::int64_t M = 2; M <= 4096; M++) {
            const int f = floor_log2(std::uint64_t(M));
            if (f + 1 > rus * f / 2) {
                continue;
            }
            const CostVector b = hwp_cost(M, HwpStrategy::Baseline);
            const CostVector c = hwp_cost(M, HwpStrategy::Catalyzed);
            ASSERT_LE(toffoli_equivalent(c, double(c.rz) * rus), toffoli_equivalent(b, double(b.rz) * rus) + 1e-9)
                << "M=" << M << " delta=" << delta;
        }
    }
}

TEST(Properties, CostVectorMonoid) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(0, 1000);
    auto draw = [&] {
        CostVector c;
        c.toffoli = d(rng);
        c.t_gates = d(rng);
        c.rz = d(rng);
        c.ry = d(rng);
        c.ancilla = d(rng);
        return c;
    };
    for (int i = 0; i < 100; i++) {
        const CostVector a = draw(), b = draw(), c = draw();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + CostVector{}, a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * 3, a + a + a);
        EXPECT_EQ(a * 0, CostVector{});
    }
}

TEST(Properties, SingleBatchIsPlainHwp) {
    for (std::int64_t N = 1; N <= 1024; N++) {
        for (HwpStrategy s : {HwpStrategy::Baseline, HwpStrategy::Catalyzed}) {
            ASSERT_EQ(hwp_batched_cost(N, N, s), hwp_cost(N, s));
            ASSERT_EQ(hwp_batched_cost(N, 2 * N, s), hwp_cost(N, s));
        }
    }
}

TEST(Properties, PopcountOfPowers) {
    for (int k = 0; k < 62; k++) {
        EXPECT_EQ(popcount(std::int64_t(1) << k), 1);
        EXPECT_EQ(hamming_adders(std::int64_t(1) << k), (std::int64_t(1) << k) - 1);
    }
}

TEST(Properties, StepToffoliIsIntegral) {
    for (ModelKind k : kKinds) {
        for (int L : {4, 8, 12, 16}) {
            for (TrotterStrategy s : kAllStrategies) {
                for (long r : {1L, 2L, 7L}) {
                    const CostVector c = step_cost(k, L, r, s);
                    EXPECT_EQ(c.toffoli, std::floor(c.toffoli));
                    EXPECT_GE(c.rz, 1);
                }
            }
        }
    }
}

TEST(Properties, StepsGrowWithTau) {
    const TrotterBudget b{1.0, 0.01, 0.6, 0.001, 0};
    long prev = 0;
    for (int i = 1; i <= 200; i++) {
        const long r = trotter_steps(50.0, 0.005 * i, b);
        EXPECT_GE(r, prev);
        prev = r;
    }
}
