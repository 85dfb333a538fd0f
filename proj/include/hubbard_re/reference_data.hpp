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

#ifndef HUBBARD_RE_REFERENCE_DATA_HPP
#define HUBBARD_RE_REFERENCE_DATA_HPP

#include <vector>

#include "hubbard_re/model.hpp"
#include "hubbard_re/trotter_cost.hpp"

namespace hre {

// Published values used only for comparison columns. Nothing in the cost
// model reads these.

struct QubitizationReference {
    int L;
    double toffoli;
    int qubits;
};

/// Strategy columns follow kAllStrategies order.
struct TrotterReference {
    int L;
    double W;
    double toffoli[4];
    int qubits[4];
};

const std::vector<QubitizationReference> &qubitization_reference(ModelKind kind);
const std::vector<TrotterReference> &trotter_reference(ModelKind kind);
const QubitizationReference *find_qubitization_reference(ModelKind kind, int L);
const TrotterReference *find_trotter_reference(ModelKind kind, int L);

/// Column of s in TrotterReference.
int strategy_index(TrotterStrategy s);

}  // namespace hre

#endif
