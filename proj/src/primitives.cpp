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

#include "hubbard_re/primitives.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace hre {

CostVector &CostVector::operator+=(const CostVector &o) {
    toffoli += o.toffoli;
    t_gates += o.t_gates;
    rz += o.rz;
    ry += o.ry;
    ancilla += o.ancilla;
    return *this;
}

CostVector CostVector::operator*(std::int64_t k) const {
    CostVector r = *this;
    r.toffoli *= double(k);
    r.t_gates *= double(k);
    r.rz *= k;
    r.ry *= k;
    r.ancilla *= k;
    return r;
}

int floor_log2(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("floor_log2(0)");
    }
    return std::bit_width(n) - 1;
}

int ceil_log2(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("ceil_log2(0)");
    }
    return n == 1 ? 0 : std::bit_width(n - 1);
}

bool is_power_of_two(std::uint64_t n) {
    return std::has_single_bit(n);
}

std::uint64_t odd_part(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("odd_part(0)");
    }
    return n >> std::countr_zero(n);
}

double rus_t_count(double delta) {
    if (!(delta > 0 && delta <= 1)) {
        throw std::invalid_argument("rus_t_count: delta must lie in (0, 1]");
    }
    return 0.53 * std::log2(1 / delta) + 4.86;
}

double toffoli_equivalent(const CostVector &cv, double synthesized_rotation_t) {
    return cv.toffoli + (cv.t_gates + synthesized_rotation_t) / 2;
}

int popcount(std::int64_t M) {
    if (M < 1) {
        throw std::invalid_argument("popcount: M must be positive");
    }
    return std::popcount(std::uint64_t(M));
}

std::int64_t hamming_adders(std::int64_t M) {
    return M - popcount(M);
}

CostVector hwp_cost(std::int64_t M, HwpStrategy s) {
    if (M < 1) {
        throw std::invalid_argument("hwp_cost: M must be positive");
    }
    int k = floor_log2(std::uint64_t(M)) + 1;
    CostVector c;
    c.ancilla = hamming_adders(M);
    if (s == HwpStrategy::Baseline) {
        c.toffoli = double(hamming_adders(M));
        c.rz = k;
    } else {
        c.toffoli = double(hamming_adders(M) + k);
        c.rz = 1;
        c.ancilla += k;
    }
    return c;
}

CostVector hwp_batched_cost(std::int64_t N, std::int64_t B, HwpStrategy s) {
    if (N < 1 || B < 1) {
        throw std::invalid_argument("hwp_batched_cost: N and B must be positive");
    }
    B = std::min(B, N);
    CostVector c = hwp_cost(B, s) * (N / B);
    std::int64_t ancilla = c.ancilla / (N / B);
    if (N % B != 0) {
        c += hwp_cost(N % B, s);
    }
    c.ancilla = ancilla;
    return c;
}

CostVector usp_cost(std::int64_t L) {
    if (L < 2) {
        throw std::invalid_argument("usp_cost: L must be at least 2");
    }
    std::uint64_t m = odd_part(std::uint64_t(L));
    CostVector c;
    if (m > 1) {
        int cm = ceil_log2(m);
        c.toffoli = 2.0 * cm - 2;
        c.rz = 2;
        c.ancilla = cm;
    }
    return c;
}

CostVector qrom_cost(std::int64_t N, bool /*controlled*/) {
    if (N < 1) {
        throw std::invalid_argument("qrom_cost: N must be positive");
    }
    CostVector c;
    c.toffoli = double(N - 1);
    c.ancilla = ceil_log2(std::uint64_t(N));
    return c;
}

CostVector multi_controlled_x(int n) {
    if (n < 2) {
        throw std::invalid_argument("multi_controlled_x: needs at least 2 controls");
    }
    CostVector c;
    c.toffoli = n - 1;
    c.ancilla = n - 2;
    return c;
}

}  // namespace hre
