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

#include "hubbard_re/trotter_cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hubbard_re/optimize.hpp"

namespace hre {

bool is_catalyzed(TrotterStrategy s) {
    return s == TrotterStrategy::Catalyzed || s == TrotterStrategy::BatchedCatalyzed;
}

bool is_batched(TrotterStrategy s) {
    return s == TrotterStrategy::BatchedCatalyzed || s == TrotterStrategy::BatchedBaseline;
}

std::string_view strategy_name(TrotterStrategy s) {
    switch (s) {
        case TrotterStrategy::Catalyzed:
            return "catalyzed";
        case TrotterStrategy::Baseline:
            return "baseline";
        case TrotterStrategy::BatchedCatalyzed:
            return "batched-catalyzed";
        case TrotterStrategy::BatchedBaseline:
            return "batched-baseline";
    }
    return "?";
}

TrotterStrategy parse_strategy(std::string_view name) {
    for (TrotterStrategy s : kAllStrategies) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

StepModel step_model(ModelKind kind, int L, const TrotterOptions &opt) {
    const std::int64_t L2 = std::int64_t(L) * L;
    StepModel m;
    switch (kind) {
        case ModelKind::FermiHubbard:
            // H_c (r+1), H_nn,1 (2r), H_nn,2 (r).
            m.layers = {{4, 1, L2}};
            m.t_per_r = 12.0 * double(L2);
            m.catalysts = {{L2, 1}, {L2, 1}};
            m.nt1_offset = -1;
            break;
        case ModelKind::Cuprate:
            m.layers = {{8, 1, L2}, {8, 0, 2 * L2}};
            m.t_per_r = 28.0 * double(L2);
            m.t_fixed = 4.0 * double(L2);
            m.catalysts = {{L2, 0}, {L2, 1}, {2 * L2, 0}, {L2, 0}};
            break;
        case ModelKind::Pnictide:
            // Fourteen terms in the symmetric step: nn,1 (r+1), nn,2..4 (2r
            // each), eight nnn (2r each), c,1 (2r) and c,2 (r, two layers).
            m.layers = {{7, 1, 4 * L2}, {opt.printed_pnictide_layers ? 11 : 20, 0, 2 * L2}};
            m.catalysts = {{2 * L2, 0}, {2 * L2, 0}, {4 * L2, 1}, {4 * L2, 0}, {2 * L2, 0}, {2 * L2, 0}};
            break;
    }
    return m;
}

std::int64_t batch_size(TrotterStrategy s, int L) {
    return is_batched(s) ? std::int64_t(L) * L / 2 : 0;
}

static HwpStrategy hwp_of(TrotterStrategy s) {
    return is_catalyzed(s) ? HwpStrategy::Catalyzed : HwpStrategy::Baseline;
}

static CostVector layer_cost(std::int64_t M, TrotterStrategy s, std::int64_t B) {
    return B > 0 ? hwp_batched_cost(M, B, hwp_of(s)) : hwp_cost(M, hwp_of(s));
}

CostVector step_cost(ModelKind kind, int L, long r, TrotterStrategy s, const TrotterOptions &opt) {
    if (r < 1) {
        throw std::invalid_argument("step_cost: r must be at least 1");
    }
    if (L < 2 || L % 2 != 0) {
        throw std::invalid_argument("step_cost: L must be even and >= 2");
    }
    const StepModel m = step_model(kind, L, opt);
    const std::int64_t B = batch_size(s, L);
    CostVector total;
    std::int64_t workspace = 0;
    for (const LayerFamily &f : m.layers) {
        CostVector one = layer_cost(f.size, s, B);
        workspace = std::max(workspace, one.ancilla);
        one.ancilla = 0;
        total += one * f.count(r);
    }
    total.t_gates = m.t_per_r * double(r) + m.t_fixed;
    total.ancilla = workspace;
    return total;
}

CostVector fh_step_cost(int L, long r, TrotterStrategy s) {
    return step_cost(ModelKind::FermiHubbard, L, r, s);
}

CostVector cuprate_step_cost(int L, long r, TrotterStrategy s) {
    if (L % 4 != 0) {
        throw std::invalid_argument("cuprate Trotter step needs L a multiple of 4");
    }
    return step_cost(ModelKind::Cuprate, L, r, s);
}

CostVector pnictide_step_cost(int L, long r, TrotterStrategy s, const TrotterOptions &opt) {
    return step_cost(ModelKind::Pnictide, L, r, s, opt);
}

static std::int64_t catalyst_basis(const CatalystRegister &c, std::int64_t B) {
    return B > 0 ? std::min(c.size, B) : c.size;
}

long catalyst_rotations(ModelKind kind, int L, TrotterStrategy s) {
    if (!is_catalyzed(s)) {
        return 0;
    }
    const StepModel m = step_model(kind, L);
    const std::int64_t B = batch_size(s, L);
    long n = 0;
    for (const CatalystRegister &c : m.catalysts) {
        n += floor_log2(std::uint64_t(catalyst_basis(c, B))) + 1 + c.extra;
    }
    return n;
}

long nt1_multiplier(ModelKind kind, int L, TrotterStrategy s) {
    if (!is_catalyzed(s)) {
        return 0;
    }
    return catalyst_rotations(kind, L, s) + step_model(kind, L).nt1_offset;
}

static void check_budget(const TrotterBudget &b, TrotterStrategy s) {
    const bool ok = b.delta_E > 0 && b.x > 0 && b.x < 1 && b.y > 0 && b.y < 1 && b.tau > 0 && b.z >= 0 &&
                    b.s() < 1 && (!is_catalyzed(s) || b.z > 0);
    if (!ok) {
        throw std::invalid_argument("invalid Trotter budget");
    }
}

std::pair<double, double> synthesis_t_counts(ModelKind kind, int L, long r, const TrotterBudget &b,
                                             TrotterStrategy s, const TrotterOptions &opt) {
    check_budget(b, s);
    const double share = (1 - b.y) * b.delta_E * b.tau;
    const double n_rz = double(step_cost(kind, L, r, s, opt).rz);
    const double nt2 = n_rz * (0.53 * std::log2(n_rz / (b.x * share)) + 4.86);
    double nt1 = 0;
    if (is_catalyzed(s)) {
        const double ncat = double(catalyst_rotations(kind, L, s));
        nt1 = double(nt1_multiplier(kind, L, s)) * (0.53 * std::log2(ncat / (b.z * share)) + 4.86);
    }
    return {nt1, nt2};
}

double queries(double y, double tau, double delta_E) {
    if (!(y > 0 && y < 1 && tau > 0 && delta_E > 0)) {
        throw std::invalid_argument("queries: need y in (0,1), tau > 0, delta_E > 0");
    }
    return 0.76 * std::numbers::pi / (y * tau * delta_E);
}

int total_qubits(ModelKind kind, int L, TrotterStrategy s) {
    const StepModel m = step_model(kind, L);
    const std::int64_t B = batch_size(s, L);
    std::int64_t largest = 0;
    for (const LayerFamily &f : m.layers) {
        largest = std::max(largest, B > 0 ? std::min(f.size, B) : f.size);
    }
    // System register, one QPE phase qubit, one RUS ancilla, HW workspace.
    std::int64_t q = system_qubits(kind, L) + 2 + hamming_adders(largest);
    if (is_catalyzed(s)) {
        for (const CatalystRegister &c : m.catalysts) {
            q += floor_log2(std::uint64_t(catalyst_basis(c, B))) + 1 + c.extra;
        }
        // Carry register of the phase-gradient adder.
        q += floor_log2(std::uint64_t(largest)) + 1;
    }
    return int(q);
}

TrotterEstimate evaluate_trotter(const ModelSpec &spec, TrotterStrategy s, const TrotterBudget &b, double W,
                                 const TrotterOptions &opt) {
    check_budget(b, s);
    TrotterEstimate e;
    e.W = W;
    e.budget = b;
    e.strategy = s;
    e.r = trotter_steps(W, b.tau, b);
    const CostVector step = step_cost(spec.kind, spec.L, e.r, s, opt);
    auto [nt1, nt2] = synthesis_t_counts(spec.kind, spec.L, e.r, b, s, opt);
    e.n_queries = queries(b.y, b.tau, b.delta_E);
    e.n_toffoli_per_u = step.toffoli;
    e.n_t_direct = step.t_gates;
    e.n_t1 = nt1;
    e.n_t2 = nt2;
    if (opt.amortize_catalyst) {
        e.total_toffoli = e.n_queries * (step.toffoli + (e.n_t_direct + nt2) / 2) + nt1 / 2;
    } else {
        e.total_toffoli = e.n_queries * (step.toffoli + (e.n_t_direct + nt1 + nt2) / 2);
    }
    e.total_qubits = total_qubits(spec.kind, spec.L, s);
    return e;
}

TrotterEstimate optimize_trotter(const ModelSpec &spec, TrotterStrategy s, const TrotterOptions &opt,
                                 const FhNormTable &table) {
    validate_trotter(spec);
    const double dE = opt.delta_E > 0 ? opt.delta_E : extensive_error(spec.L);
    const double W = trotter_w(spec, table);
    if (!(W > 0)) {
        throw InfeasibleError("optimize_trotter: W must be positive to bound the step size");
    }
    const double tmax = tau_max(W);
    const bool cat = is_catalyzed(s);
    constexpr double kInf = std::numeric_limits<double>::infinity();

    // Point layout: (x, y, tau) for baseline, (x, y, tau, z) for catalyzed.
    auto budget_of = [&](const Point &p) {
        return TrotterBudget{dE, p[0], p[1], cat ? p[3] : 0.0, p[2]};
    };
    auto objective = [&](const Point &p) {
        TrotterBudget b = budget_of(p);
        if (!(b.tau < tmax) || !(b.s() < 1)) {
            return kInf;
        }
        return evaluate_trotter(spec, s, b, W, opt).total_toffoli;
    };

    SearchSpace space;
    space.dims = {{1e-6, 0.9, Scale::Log, 0}, {0.01, 0.99, Scale::Linear, 0}, {tmax * 1e-6, tmax, Scale::Linear, 0}};
    if (cat) {
        space.dims.push_back({1e-8, 0.9, Scale::Log, 0});
    }
    space.constraint = [&](const Point &p) { return budget_of(p).s() < 1 && p[2] < tmax; };

    // Coarse grid over (y, x, z). For each cell the cost only changes with r
    // in steps, and falls with tau inside a step, so tau is placed just below
    // each integer-r boundary.
    struct Seed {
        double v;
        Point p;
    };
    std::vector<Seed> best;
    const int keep = 8;
    long evals = 0;
    auto offer = [&](const Point &p) {
        double v = objective(p);
        evals++;
        if (!std::isfinite(v)) {
            return;
        }
        if ((int)best.size() < keep || v < best.back().v) {
            best.push_back({v, p});
            std::stable_sort(best.begin(), best.end(), [](const Seed &a, const Seed &b) { return a.v < b.v; });
            if ((int)best.size() > keep) {
                best.pop_back();
            }
        }
    };
    const int ny = 13, nx = 15, nz = cat ? 9 : 1;
    for (int iy = 0; iy < ny; iy++) {
        const double y = 0.3 + 0.05 * iy;
        for (int ix = 0; ix < nx; ix++) {
            const double x = std::pow(10.0, -4.0 + 3.5 * ix / (nx - 1));
            for (int iz = 0; iz < nz; iz++) {
                const double z = cat ? std::pow(10.0, -5.0 + 4.0 * iz / (nz - 1)) : 0.0;
                if (x + z >= 1) {
                    continue;
                }
                const double slope = std::sqrt(W / ((1 - x - z) * (1 - y) * dE));
                const long rmax = long(std::ceil(tmax * slope));
                for (long r = std::max(1L, rmax - 40); r <= rmax; r++) {
                    const double tau = std::min(r / slope * (1 - 1e-12), tmax * (1 - 1e-9));
                    Point p = {x, y, tau};
                    if (cat) {
                        p.push_back(z);
                    }
                    offer(p);
                }
            }
        }
    }
    if (best.empty()) {
        throw InfeasibleError("optimize_trotter: no admissible budget on the grid");
    }

    MinimizeConfig cfg;
    for (const Seed &sd : best) {
        cfg.seeds.push_back(sd.p);
    }
    cfg.refine_starts = keep;
    cfg.seed = opt.seed;
    cfg.initial_step = 0.02;
    MinimizeResult res = minimize(objective, space, cfg);
    TrotterEstimate e = evaluate_trotter(spec, s, budget_of(res.point), W, opt);
    e.evaluations = evals + res.evaluations;
    return e;
}

}  // namespace hre
