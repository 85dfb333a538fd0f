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

#include "hubbard_re/reference_data.hpp"

#include <stdexcept>

namespace hre {

namespace {

// supp-table-1: L, Toffoli, qubits.
const std::vector<QubitizationReference> kTable1 = {
    {4, 4.33e5, 58},
    {6, 9.75e5, 102},
    {8, 1.36e6, 160},
    {10, 2.19e6, 234},
    {12, 3.03e6, 324},
    {14, 3.99e6, 429},
    {16, 4.96e6, 550},
    {18, 6.38e6, 687},
    {20, 7.81e6, 840},
    {22, 9.36e6, 1009},
    {24, 1.11e7, 1194},
    {26, 1.29e7, 1395},
    {28, 1.50e7, 1611},
    {30, 1.71e7, 1844},
    {32, 1.93e7, 2092},
};

// supp-table-2: L, Toffoli, qubits.
const std::vector<QubitizationReference> kTable2 = {
    {4, 1.04e6, 59},
    {6, 1.78e6, 102},
    {8, 2.29e6, 161},
    {10, 3.41e6, 235},
    {12, 4.53e6, 324},
    {14, 5.81e6, 430},
    {16, 7.10e6, 551},
    {18, 9.01e6, 688},
    {20, 1.09e7, 841},
    {22, 1.30e7, 1010},
    {24, 1.53e7, 1194},
    {26, 1.78e7, 1395},
    {28, 2.05e7, 1612},
    {30, 2.33e7, 1844},
    {32, 2.62e7, 2093},
};

// supp-table-3: L, Toffoli, qubits.
const std::vector<QubitizationReference> kTable3 = {
    {4, 1.08e7, 100},
    {6, 1.81e7, 183},
    {8, 2.56e7, 298},
    {10, 3.76e7, 444},
    {12, 5.11e7, 621},
    {14, 6.67e7, 831},
    {16, 8.39e7, 1072},
    {18, 1.05e8, 1345},
    {20, 1.29e8, 1650},
    {22, 1.54e8, 1987},
    {24, 1.82e8, 2355},
    {26, 2.12e8, 2756},
    {28, 2.45e8, 3189},
    {30, 2.79e8, 3653},
    {32, 3.16e8, 4150},
};

// supp-table-4: L, W, then Toffoli and qubits for catalyzed, baseline,
// batched catalyzed and batched baseline.
const std::vector<TrotterReference> kTable4 = {
    {4, 2.82e2, {9.80e5, 1.52e6, 1.23e6, 2.07e6}, {66, 49, 55, 41}},
    {6, 6.54e2, {8.92e5, 1.19e6, 9.32e5, 1.48e6}, {128, 108, 107, 90}},
    {8, 1.16e3, {8.40e5, 1.08e6, 8.79e5, 1.24e6}, {216, 193, 181, 161}},
    {10, 1.83e3, {8.23e5, 9.64e5, 8.81e5, 1.10e6}, {322, 299, 269, 249}},
    {12, 2.63e3, {8.16e5, 9.20e5, 8.86e5, 1.05e6}, {458, 432, 383, 360}},
    {14, 3.61e3, {8.07e5, 8.83e5, 8.68e5, 9.81e5}, {613, 587, 512, 489}},
    {16, 4.69e3, {8.04e5, 8.83e5, 8.63e5, 9.45e5}, {798, 769, 667, 641}},
    {18, 5.82e3, {8.02e5, 8.62e5, 8.51e5, 9.25e5}, {1000, 971, 835, 809}},
    {20, 7.21e3, {8.00e5, 8.51e5, 8.54e5, 9.05e5}, {1228, 1199, 1025, 999}},
    {22, 8.71e3, {8.00e5, 8.44e5, 8.40e5, 8.89e5}, {1478, 1449, 1233, 1207}},
    {24, 1.04e4, {7.94e5, 8.39e5, 8.48e5, 8.87e5}, {1760, 1728, 1469, 1440}},
    {26, 1.22e4, {8.01e5, 8.42e5, 8.46e5, 8.85e5}, {2058, 2026, 1717, 1688}},
    {28, 1.42e4, {7.96e5, 8.36e5, 8.49e5, 8.77e5}, {2383, 2351, 1988, 1959}},
    {30, 1.63e4, {7.98e5, 8.37e5, 8.41e5, 8.78e5}, {2730, 2698, 2277, 2248}},
    {32, 1.86e4, {8.01e5, 8.42e5, 8.45e5, 8.86e5}, {3108, 3073, 2593, 2561}},
};

// supp-table-5: L, W, then Toffoli and qubits for catalyzed, baseline,
// batched catalyzed and batched baseline.
const std::vector<TrotterReference> kTable5 = {
    {4, 7.91e2, {6.38e6, 1.19e7, 9.08e6, 1.94e7}, {93, 65, 62, 41}},
    {8, 3.16e3, {5.25e6, 7.08e6, 6.07e6, 1.01e7}, {295, 257, 192, 161}},
    {12, 7.11e3, {4.91e6, 6.02e6, 5.30e6, 7.55e6}, {619, 576, 396, 360}},
    {16, 1.26e4, {5.22e6, 5.65e6, 5.45e6, 6.40e6}, {1073, 1025, 682, 641}},
    {20, 1.98e4, {5.12e6, 5.40e6, 5.28e6, 6.00e6}, {1647, 1599, 1040, 999}},
    {24, 2.85e4, {5.11e6, 5.39e6, 5.23e6, 5.87e6}, {2357, 2304, 1486, 1440}},
    {28, 3.87e4, {5.09e6, 5.25e6, 5.18e6, 5.59e6}, {3188, 3135, 2005, 1959}},
    {32, 5.06e4, {5.07e6, 5.21e6, 5.18e6, 5.51e6}, {4155, 4097, 2612, 2561}},
};

// supp-table-6: L, W, then Toffoli and qubits for catalyzed, baseline,
// batched catalyzed and batched baseline.
const std::vector<TrotterReference> kTable6 = {
    {4, 1.14e4, {4.16e7, 7.59e7, 8.35e7, 1.86e8}, {175, 129, 101, 73}},
    {6, 2.56e4, {3.57e7, 5.36e7, 5.31e7, 1.14e8}, {341, 288, 197, 162}},
    {8, 4.54e4, {3.36e7, 4.53e7, 4.57e7, 8.76e7}, {573, 513, 331, 289}},
    {10, 7.10e4, {3.28e7, 3.97e7, 3.99e7, 6.50e7}, {859, 799, 491, 449}},
    {12, 1.02e5, {3.25e7, 3.78e7, 3.83e7, 5.92e7}, {1219, 1152, 697, 648}},
    {14, 1.39e5, {3.31e7, 3.58e7, 3.63e7, 5.09e7}, {1634, 1567, 930, 881}},
    {16, 1.82e5, {3.13e7, 3.56e7, 3.60e7, 4.95e7}, {2123, 2049, 1209, 1153}},
    {18, 2.30e5, {3.11e7, 3.42e7, 3.48e7, 4.46e7}, {2665, 2591, 1513, 1457}},
    {20, 2.84e5, {3.14e7, 3.35e7, 3.43e7, 4.20e7}, {3273, 3199, 1855, 1799}},
    {22, 3.44e5, {3.10e7, 3.31e7, 3.36e7, 3.98e7}, {3943, 3869, 2231, 2175}},
    {24, 4.09e5, {3.10e7, 3.28e7, 3.38e7, 3.97e7}, {4689, 4608, 2655, 2592}},
    {26, 4.80e5, {3.28e7, 3.27e7, 3.34e7, 3.82e7}, {5487, 5406, 3103, 3040}},
    {28, 5.56e5, {3.11e7, 3.25e7, 3.33e7, 3.73e7}, {6352, 6271, 3590, 3527}},
    {30, 6.39e5, {3.08e7, 3.25e7, 3.31e7, 3.64e7}, {7279, 7198, 4111, 4048}},
    {32, 7.27e5, {3.08e7, 3.23e7, 3.32e7, 3.67e7}, {8281, 8193, 4679, 4609}},
};

}  // namespace

const std::vector<QubitizationReference> &qubitization_reference(ModelKind kind) {
    switch (kind) {
        case ModelKind::FermiHubbard:
            return kTable1;
        case ModelKind::Cuprate:
            return kTable2;
        case ModelKind::Pnictide:
            return kTable3;
    }
    throw std::invalid_argument("unknown model");
}

const std::vector<TrotterReference> &trotter_reference(ModelKind kind) {
    switch (kind) {
        case ModelKind::FermiHubbard:
            return kTable4;
        case ModelKind::Cuprate:
            return kTable5;
        case ModelKind::Pnictide:
            return kTable6;
    }
    throw std::invalid_argument("unknown model");
}

const QubitizationReference *find_qubitization_reference(ModelKind kind, int L) {
    for (const auto &r : qubitization_reference(kind)) {
        if (r.L == L) {
            return &r;
        }
    }
    return nullptr;
}

const TrotterReference *find_trotter_reference(ModelKind kind, int L) {
    for (const auto &r : trotter_reference(kind)) {
        if (r.L == L) {
            return &r;
        }
    }
    return nullptr;
}

int strategy_index(TrotterStrategy s) {
    switch (s) {
        case TrotterStrategy::Catalyzed:
            return 0;
        case TrotterStrategy::Baseline:
            return 1;
        case TrotterStrategy::BatchedCatalyzed:
            return 2;
        case TrotterStrategy::BatchedBaseline:
            return 3;
    }
    throw std::invalid_argument("unknown strategy");
}

}  // namespace hre
