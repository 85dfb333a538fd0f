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

#include "hubbard_re/qubitization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hubbard_re/optimize.hpp"
#include "hubbard_re/primitives.hpp"

namespace hre {

namespace {

struct Shape {
    double toffoli_per_query;
    // T gates per query outside rotation synthesis.
    double direct_t;
    // Rotations per query.
    int rotations;
    int extra_qubits;
};

Shape shape(const ModelSpec &spec, const QubitizationOptions &opt) {
    const int L = spec.L;
    const double L2 = double(L) * L;
    const bool pow2 = is_power_of_two(std::uint64_t(L));
    const int log_l = pow2 || opt.printed_log_ceiling ? ceil_log2(std::uint64_t(L)) : floor_log2(std::uint64_t(L));
    const double usp = pow2 ? 0.0 : 4.0 * ceil_log2(odd_part(std::uint64_t(L)));
    switch (spec.kind) {
        case ModelKind::FermiHubbard:
            return {5 * L2 + 10 * log_l - 4 + usp, 4, pow2 ? 2 : 6, 3};
        case ModelKind::Cuprate:
            return {5 * L2 + 12 * log_l + 2 + usp, 4, pow2 ? 10 : 14, 3};
        case ModelKind::Pnictide:
            return {14 * L2 + 12 * log_l + 27 + usp, 22, pow2 ? 18 : 22, 10};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

int phase_qubits(double lambda, double delta_E, double x) {
    if (!(x > 0 && x < 1)) {
        throw std::invalid_argument("phase_qubits: x must lie in (0, 1)");
    }
    if (!(lambda > 0 && delta_E > 0)) {
        throw std::invalid_argument("phase_qubits: lambda and delta_E must be positive");
    }
    return int(std::ceil(std::log2(std::numbers::pi * lambda / (2 * std::sqrt(x) * delta_E))));
}

double toffoli_per_query(const ModelSpec &spec, const QubitizationOptions &opt) {
    validate(spec);
    return shape(spec, opt).toffoli_per_query;
}

QubitizationEstimate estimate_qubitization(const ModelSpec &spec, double delta_E, double x,
                                           const QubitizationOptions &opt) {
    validate(spec);
    if (!(x > 0 && x < 1)) {
        throw std::invalid_argument("estimate_qubitization: x must lie in (0, 1)");
    }
    if (!(delta_E > 0)) {
        throw std::invalid_argument("estimate_qubitization: delta_E must be positive");
    }
    const double pi = std::numbers::pi;
    const double lam = lambda(spec);
    const Shape s = shape(spec, opt);
    QubitizationEstimate e;
    e.lambda = lam;
    e.x = x;
    e.m_phase_qubits = phase_qubits(lam, delta_E, x);
    e.queries = pi * lam / (std::sqrt(x) * delta_E);
    // Each rotation gets an equal share of the (1-x) part of the budget.
    const double k = s.rotations;
    const double per_rotation = 0.53 * std::log2(k * pi * lam * lam / (std::sqrt(x * (1 - x)) * delta_E * delta_E)) + 4.86;
    e.n_rotations = e.queries * k;
    e.n_t = e.queries * (s.direct_t + k * per_rotation);
    e.n_toffoli = e.queries * s.toffoli_per_query;
    e.total_toffoli = e.n_toffoli + e.n_t / 2;
    const double L6 = std::pow(double(spec.L), 6);
    e.total_qubits = int(std::ceil(std::log2(pi * lam * L6 / (2 * std::sqrt(x) * delta_E)))) +
                     system_qubits(spec.kind, spec.L) + s.extra_qubits;
    return e;
}

static void require(const ModelSpec &spec, ModelKind kind) {
    if (spec.kind != kind) {
        throw std::invalid_argument("estimate called with the wrong model kind");
    }
}

QubitizationEstimate estimate_fh(const ModelSpec &spec, double delta_E, double x, const QubitizationOptions &opt) {
    require(spec, ModelKind::FermiHubbard);
    return estimate_qubitization(spec, delta_E, x, opt);
}

QubitizationEstimate estimate_cuprate(const ModelSpec &spec, double delta_E, double x,
                                      const QubitizationOptions &opt) {
    require(spec, ModelKind::Cuprate);
    return estimate_qubitization(spec, delta_E, x, opt);
}

QubitizationEstimate estimate_pnictide(const ModelSpec &spec, double delta_E, double x,
                                       const QubitizationOptions &opt) {
    require(spec, ModelKind::Pnictide);
    if (spec.L < 4) {
        throw std::invalid_argument("pnictide needs L >= 4");
    }
    return estimate_qubitization(spec, delta_E, x, opt);
}

QubitizationEstimate optimize_qubitization(const ModelSpec &spec, double delta_E, const QubitizationOptions &opt) {
    validate(spec);
    if (delta_E <= 0) {
        delta_E = extensive_error(spec.L);
    }
    auto f = [&](double x) { return estimate_qubitization(spec, delta_E, x, opt).total_toffoli; };
    MinimizeResult r = minimize_scalar(f, 0.5, 0.9999, 64, 1e-12);
    return estimate_qubitization(spec, delta_E, r.point[0], opt);
}

}  // namespace hre
