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

#ifndef HUBBARD_RE_PRIMITIVES_HPP
#define HUBBARD_RE_PRIMITIVES_HPP

#include <cstdint>

namespace hre {

/// Non-Clifford tally. t_gates is real because repeat-until-success synthesis
/// counts are expectations.
struct CostVector {
    double toffoli = 0;
    double t_gates = 0;
    std::int64_t rz = 0;
    std::int64_t ry = 0;
    std::int64_t ancilla = 0;

    CostVector &operator+=(const CostVector &o);
    friend CostVector operator+(CostVector a, const CostVector &b) { return a += b; }
    CostVector operator*(std::int64_t k) const;
    friend bool operator==(const CostVector &, const CostVector &) = default;
};

enum class HwpStrategy { Baseline, Catalyzed };

int floor_log2(std::uint64_t n);
int ceil_log2(std::uint64_t n);
bool is_power_of_two(std::uint64_t n);
/// Largest odd divisor.
std::uint64_t odd_part(std::uint64_t n);

/// Mean T count of RUS synthesis of one Z rotation to precision delta.
double rus_t_count(double delta);

/// Toffoli plus half the T gates (2 T = 1 Toffoli).
double toffoli_equivalent(const CostVector &cv, double synthesized_rotation_t);

int popcount(std::int64_t M);
/// Number of half/full adders (one Toffoli each) in a Hamming-weight circuit.
std::int64_t hamming_adders(std::int64_t M);

/// One layer of M same-angle Z rotations. Catalyst synthesis is excluded.
/// ancilla counts the Hamming-weight workspace and, for Catalyzed, the adder
/// carries; the catalyst register itself is charged by the caller.
CostVector hwp_cost(std::int64_t M, HwpStrategy s);

/// N rotations split into floor(N/B) batches of B plus one remainder batch.
/// ancilla is the workspace of the largest batch.
CostVector hwp_batched_cost(std::int64_t N, std::int64_t B, HwpStrategy s);

/// Uniform superposition over L states, L = 2^k m with m odd.
CostVector usp_cost(std::int64_t L);
CostVector qrom_cost(std::int64_t N, bool controlled = false);
/// C^n X with n controls.
CostVector multi_controlled_x(int n);

}  // namespace hre

#endif
