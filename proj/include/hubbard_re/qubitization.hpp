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

#ifndef HUBBARD_RE_QUBITIZATION_HPP
#define HUBBARD_RE_QUBITIZATION_HPP

#include "hubbard_re/model.hpp"

namespace hre {

struct QubitizationOptions {
    /// Use ceil(log2 L) in the non-binary-power Toffoli term as printed,
    /// instead of floor(log2 L). See README.
    bool printed_log_ceiling = false;
};

struct QubitizationEstimate {
    double lambda = 0;
    int m_phase_qubits = 0;
    /// Continuous walk-operator query factor pi*lambda/(sqrt(x) dE).
    double queries = 0;
    double n_rotations = 0;
    double n_t = 0;
    double n_toffoli = 0;
    double total_toffoli = 0;
    int total_qubits = 0;
    double x = 0;
};

int phase_qubits(double lambda, double delta_E, double x);

/// Closed-form estimate at a fixed error split x, dispatching on spec.kind.
QubitizationEstimate estimate_qubitization(const ModelSpec &spec, double delta_E, double x,
                                           const QubitizationOptions &opt = {});

QubitizationEstimate estimate_fh(const ModelSpec &spec, double delta_E, double x, const QubitizationOptions &opt = {});
QubitizationEstimate estimate_cuprate(const ModelSpec &spec, double delta_E, double x,
                                      const QubitizationOptions &opt = {});
QubitizationEstimate estimate_pnictide(const ModelSpec &spec, double delta_E, double x,
                                       const QubitizationOptions &opt = {});

/// Toffoli cost of one walk-operator query (the bracket multiplying the
/// query factor).
double toffoli_per_query(const ModelSpec &spec, const QubitizationOptions &opt = {});

/// Minimizes total_toffoli over x in (0.5, 0.9999). delta_E <= 0 selects the
/// extensive error target.
QubitizationEstimate optimize_qubitization(const ModelSpec &spec, double delta_E = 0,
                                           const QubitizationOptions &opt = {});

}  // namespace hre

#endif
