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

#ifndef HUBBARD_RE_REPORT_HPP
#define HUBBARD_RE_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hubbard_re/model.hpp"
#include "hubbard_re/qubitization.hpp"
#include "hubbard_re/trotter_cost.hpp"

namespace hre {

enum class Method { Qubitization, Trotter };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

/// One output row. Fields that do not apply to a method stay empty.
struct ReportRow {
    std::string model;
    std::string method;
    std::string strategy;
    int L = 0;
    std::optional<double> W;
    std::optional<long> r;
    std::optional<double> x;
    std::optional<double> y;
    std::optional<double> z;
    std::optional<double> tau;
    double toffoli = 0;
    long qubits = 0;
    std::optional<double> ref_toffoli;
    std::optional<long> ref_qubits;
    /// (toffoli - ref_toffoli) / ref_toffoli.
    std::optional<double> rel_dev;

    friend bool operator==(const ReportRow &, const ReportRow &) = default;
};

inline constexpr std::string_view kCsvHeader =
    "model,method,strategy,L,W,r,x,y,z,tau,toffoli,qubits,ref_toffoli,ref_qubits,rel_dev";

ReportRow qubitization_row(const ModelSpec &spec, const QubitizationEstimate &e);
ReportRow trotter_row(const ModelSpec &spec, const TrotterEstimate &e);

/// Fills ref_* and rel_dev from the embedded tables when the row's model and
/// L are tabulated. Callers decide whether the couplings make this
/// comparison meaningful.
void attach_reference(ReportRow &row);

struct ReproduceOptions {
    std::optional<TrotterStrategy> strategy;
    TrotterOptions trotter;
    QubitizationOptions qubitization;
    /// Fermi-Hubbard norm table; null selects the embedded one.
    const FhNormTable *fh_norms = nullptr;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Rows of reproduction table 1..6 in L order (then strategy order), each
/// with its reference comparison. Throws std::invalid_argument for other n.
std::vector<ReportRow> reproduce_table(int n, const ReproduceOptions &opt = {});

/// Model and method reproduced by table n.
std::pair<ModelKind, Method> table_subject(int n);

/// Smallest L present in both row sets where every Trotter row beats the
/// qubitization row at that L.
std::optional<int> crossover_L(const std::vector<ReportRow> &qubitization, const std::vector<ReportRow> &trotter);

/// Full-precision CSV with the fixed header. Empty cells for absent values.
std::string to_csv(const std::vector<ReportRow> &rows);
/// Inverse of to_csv. Throws std::invalid_argument on malformed input.
std::vector<ReportRow> parse_csv(std::string_view text);

nlohmann::ordered_json to_json(const std::vector<ReportRow> &rows);

/// Aligned text table with three significant figures.
std::string to_table(const std::vector<ReportRow> &rows);

/// Largest |rel_dev| over rows that have one.
double max_abs_rel_dev(const std::vector<ReportRow> &rows);

}  // namespace hre

#endif
