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

#ifndef HUBBARD_RE_TROTTER_COST_HPP
#define HUBBARD_RE_TROTTER_COST_HPP

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "hubbard_re/model.hpp"
#include "hubbard_re/primitives.hpp"
#include "hubbard_re/trotter_bounds.hpp"

namespace hre {

enum class TrotterStrategy { Catalyzed, Baseline, BatchedCatalyzed, BatchedBaseline };

inline constexpr TrotterStrategy kAllStrategies[] = {TrotterStrategy::Catalyzed, TrotterStrategy::Baseline,
                                                     TrotterStrategy::BatchedCatalyzed,
                                                     TrotterStrategy::BatchedBaseline};

bool is_catalyzed(TrotterStrategy s);
bool is_batched(TrotterStrategy s);
std::string_view strategy_name(TrotterStrategy s);
TrotterStrategy parse_strategy(std::string_view name);

struct TrotterOptions {
    /// Pnictide: use the printed 11r multiplier on the 2L^2 layers instead of
    /// counting 2r applications per interior term (20r). See README.
    bool printed_pnictide_layers = false;
    /// Charge catalyst synthesis once instead of once per query.
    bool amortize_catalyst = false;
    /// Overrides the extensive error target when positive.
    double delta_E = 0;
    /// Rotates the Nelder-Mead start simplices; 0 is canonical.
    std::uint64_t seed = 0;
};

/// HWP layers of one size applied (per_r * r + fixed) times per step.
struct LayerFamily {
    long per_r = 0;
    long fixed = 0;
    std::int64_t size = 0;

    long count(long r) const { return per_r * r + fixed; }
};

/// Catalyst register serving one rotation angle: floor(log2 M) + 1 + extra
/// qubits, with M = min(size, batch).
struct CatalystRegister {
    std::int64_t size = 0;
    int extra = 0;
};

struct StepModel {
    std::vector<LayerFamily> layers;
    /// Direct T gates per step: (t_per_r * r + t_fixed).
    double t_per_r = 0;
    double t_fixed = 0;
    std::vector<CatalystRegister> catalysts;
    /// Added to the catalyst rotation count to form the N_T1 multiplier.
    int nt1_offset = 0;
};

StepModel step_model(ModelKind kind, int L, const TrotterOptions &opt = {});

/// Batch size L^2/2 for batched strategies; 0 means unbatched.
std::int64_t batch_size(TrotterStrategy s, int L);

/// Per-step cost: toffoli, t_gates = direct T, rz = layer rotations,
/// ancilla = HWP workspace of the largest layer.
CostVector step_cost(ModelKind kind, int L, long r, TrotterStrategy s, const TrotterOptions &opt = {});
CostVector fh_step_cost(int L, long r, TrotterStrategy s);
CostVector cuprate_step_cost(int L, long r, TrotterStrategy s);
CostVector pnictide_step_cost(int L, long r, TrotterStrategy s, const TrotterOptions &opt = {});

/// Rotations needed to synthesize all catalyst states, and the printed
/// N_T1 multiplier. Zero for baseline strategies.
long catalyst_rotations(ModelKind kind, int L, TrotterStrategy s);
long nt1_multiplier(ModelKind kind, int L, TrotterStrategy s);

/// (N_T1, N_T2) per step.
std::pair<double, double> synthesis_t_counts(ModelKind kind, int L, long r, const TrotterBudget &b,
                                             TrotterStrategy s, const TrotterOptions &opt = {});

/// N_q = 0.76 pi / (y tau dE).
double queries(double y, double tau, double delta_E);

int total_qubits(ModelKind kind, int L, TrotterStrategy s);

struct TrotterEstimate {
    double W = 0;
    long r = 0;
    double n_queries = 0;
    double n_toffoli_per_u = 0;
    double n_t1 = 0;
    double n_t2 = 0;
    double n_t_direct = 0;
    double total_toffoli = 0;
    int total_qubits = 0;
    TrotterBudget budget;
    TrotterStrategy strategy = TrotterStrategy::Catalyzed;
    long evaluations = 0;
};

/// Cost at a fixed budget. Throws std::invalid_argument on invalid budgets.
TrotterEstimate evaluate_trotter(const ModelSpec &spec, TrotterStrategy s, const TrotterBudget &b, double W,
                                 const TrotterOptions &opt = {});

/// Minimizes total Toffoli over (x, y, z, tau). Throws InfeasibleError when
/// no admissible budget exists.
TrotterEstimate optimize_trotter(const ModelSpec &spec, TrotterStrategy s, const TrotterOptions &opt = {},
                                 const FhNormTable &table = FhNormTable::embedded());

}  // namespace hre

#endif
