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

#include "hubbard_re/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <atomic>
#include <exception>
#include <future>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hubbard_re/reference_data.hpp"

namespace hre {

std::string_view method_name(Method m) { return m == Method::Qubitization ? "qubitization" : "trotter"; }

Method parse_method(std::string_view name) {
    if (name == "qubitization" || name == "qub") {
        return Method::Qubitization;
    }
    if (name == "trotter" || name == "trot") {
        return Method::Trotter;
    }
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

ReportRow qubitization_row(const ModelSpec &spec, const QubitizationEstimate &e) {
    ReportRow row;
    row.model = std::string(model_name(spec.kind));
    row.method = "qubitization";
    row.L = spec.L;
    row.x = e.x;
    row.toffoli = e.total_toffoli;
    row.qubits = e.total_qubits;
    return row;
}

ReportRow trotter_row(const ModelSpec &spec, const TrotterEstimate &e) {
    ReportRow row;
    row.model = std::string(model_name(spec.kind));
    row.method = "trotter";
    row.strategy = std::string(strategy_name(e.strategy));
    row.L = spec.L;
    row.W = e.W;
    row.r = e.r;
    row.x = e.budget.x;
    row.y = e.budget.y;
    if (is_catalyzed(e.strategy)) {
        row.z = e.budget.z;
    }
    row.tau = e.budget.tau;
    row.toffoli = e.total_toffoli;
    row.qubits = e.total_qubits;
    return row;
}

void attach_reference(ReportRow &row) {
    const ModelKind kind = parse_model(row.model);
    if (row.method == "qubitization") {
        if (const auto *ref = find_qubitization_reference(kind, row.L)) {
            row.ref_toffoli = ref->toffoli;
            row.ref_qubits = ref->qubits;
        }
    } else {
        if (const auto *ref = find_trotter_reference(kind, row.L)) {
            const int k = strategy_index(parse_strategy(row.strategy));
            row.ref_toffoli = ref->toffoli[k];
            row.ref_qubits = ref->qubits[k];
        }
    }
    if (row.ref_toffoli) {
        row.rel_dev = (row.toffoli - *row.ref_toffoli) / *row.ref_toffoli;
    }
}

std::pair<ModelKind, Method> table_subject(int n) {
    static constexpr ModelKind kinds[] = {ModelKind::FermiHubbard, ModelKind::Cuprate, ModelKind::Pnictide};
    if (n < 1 || n > 6) {
        throw std::invalid_argument("reproduction tables are numbered 1..6");
    }
    return {kinds[(n - 1) % 3], n <= 3 ? Method::Qubitization : Method::Trotter};
}

std::vector<ReportRow> reproduce_table(int n, const ReproduceOptions &opt) {
    const auto [kind, method] = table_subject(n);
    struct Job {
        int L;
        std::optional<TrotterStrategy> s;
    };
    std::vector<Job> jobs;
    if (method == Method::Qubitization) {
        for (const auto &ref : qubitization_reference(kind)) {
            jobs.push_back({ref.L, std::nullopt});
        }
    } else {
        for (const auto &ref : trotter_reference(kind)) {
            for (TrotterStrategy s : kAllStrategies) {
                if (!opt.strategy || *opt.strategy == s) {
                    jobs.push_back({ref.L, s});
                }
            }
        }
    }

    const FhNormTable &norms = opt.fh_norms ? *opt.fh_norms : FhNormTable::embedded();
    auto run = [&](const Job &j) {
        ModelSpec spec = default_spec(kind, j.L);
        ReportRow row = j.s ? trotter_row(spec, optimize_trotter(spec, *j.s, opt.trotter, norms))
                            : qubitization_row(spec, optimize_qubitization(spec, opt.trotter.delta_E, opt.qubitization));
        attach_reference(row);
        return row;
    };

    // Rows are independent and each optimization is deterministic, so the
    // result does not depend on scheduling.
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<ReportRow> rows(jobs.size());
    std::vector<std::future<void>> workers;
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    for (unsigned w = 0; w < std::min<size_t>(threads, jobs.size()); w++) {
        workers.push_back(std::async(std::launch::async, [&] {
            for (size_t k = next++; k < jobs.size(); k = next++) {
                try {
                    rows[k] = run(jobs[k]);
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!first_error) {
                        first_error = std::current_exception();
                    }
                }
            }
        }));
    }
    for (auto &f : workers) {
        f.get();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
    return rows;
}

std::optional<int> crossover_L(const std::vector<ReportRow> &qubitization, const std::vector<ReportRow> &trotter) {
    std::optional<int> best;
    for (const ReportRow &q : qubitization) {
        bool any = false, all = true;
        for (const ReportRow &t : trotter) {
            if (t.L == q.L) {
                any = true;
                all = all && t.toffoli < q.toffoli;
            }
        }
        if (any && all && (!best || q.L < *best)) {
            best = q.L;
        }
    }
    return best;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

template <typename T>
std::string cell(const std::optional<T> &v) {
    if (!v) {
        return {};
    }
    if constexpr (std::is_same_v<T, double>) {
        return fmt_double(*v);
    } else {
        return std::to_string(*v);
    }
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        auto p = line.find(sep, start);
        out.push_back(line.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) {
            return out;
        }
        start = p + 1;
    }
}

template <typename T>
T parse_value(std::string_view s) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("csv: bad number '" + std::string(s) + "'");
    }
    return v;
}

template <typename T>
std::optional<T> parse_opt(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    return parse_value<T>(s);
}

std::string sig3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

template <typename T>
std::string sig3(const std::optional<T> &v) {
    if (!v) {
        return "-";
    }
    if constexpr (std::is_same_v<T, double>) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", *v);
        return buf;
    } else {
        return std::to_string(*v);
    }
}

}  // namespace

std::string to_csv(const std::vector<ReportRow> &rows) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const ReportRow &r : rows) {
        const std::string cells[] = {r.model,       r.method,      r.strategy,           std::to_string(r.L),
                                     cell(r.W),     cell(r.r),     cell(r.x),            cell(r.y),
                                     cell(r.z),     cell(r.tau),   fmt_double(r.toffoli), std::to_string(r.qubits),
                                     cell(r.ref_toffoli), cell(r.ref_qubits), cell(r.rel_dev)};
        for (size_t k = 0; k < std::size(cells); k++) {
            if (k) {
                out += ',';
            }
            out += cells[k];
        }
        out += '\n';
    }
    return out;
}

std::vector<ReportRow> parse_csv(std::string_view text) {
    std::vector<ReportRow> rows;
    bool header = true;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (header) {
            if (line != kCsvHeader) {
                throw std::invalid_argument("csv: unexpected header");
            }
            header = false;
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 15) {
            throw std::invalid_argument("csv: expected 15 fields");
        }
        ReportRow r;
        r.model = f[0];
        r.method = f[1];
        r.strategy = f[2];
        r.L = parse_value<int>(f[3]);
        r.W = parse_opt<double>(f[4]);
        r.r = parse_opt<long>(f[5]);
        r.x = parse_opt<double>(f[6]);
        r.y = parse_opt<double>(f[7]);
        r.z = parse_opt<double>(f[8]);
        r.tau = parse_opt<double>(f[9]);
        r.toffoli = parse_value<double>(f[10]);
        r.qubits = parse_value<long>(f[11]);
        r.ref_toffoli = parse_opt<double>(f[12]);
        r.ref_qubits = parse_opt<long>(f[13]);
        r.rel_dev = parse_opt<double>(f[14]);
        rows.push_back(std::move(r));
    }
    if (header) {
        throw std::invalid_argument("csv: missing header");
    }
    return rows;
}

nlohmann::ordered_json to_json(const std::vector<ReportRow> &rows) {
    auto j = nlohmann::ordered_json::array();
    auto put = [](nlohmann::ordered_json &o, const char *k, const auto &v) {
        if (v) {
            o[k] = *v;
        } else {
            o[k] = nullptr;
        }
    };
    for (const ReportRow &r : rows) {
        nlohmann::ordered_json o;
        o["model"] = r.model;
        o["method"] = r.method;
        o["strategy"] = r.strategy;
        o["L"] = r.L;
        put(o, "W", r.W);
        put(o, "r", r.r);
        put(o, "x", r.x);
        put(o, "y", r.y);
        put(o, "z", r.z);
        put(o, "tau", r.tau);
        o["toffoli"] = r.toffoli;
        o["qubits"] = r.qubits;
        put(o, "ref_toffoli", r.ref_toffoli);
        put(o, "ref_qubits", r.ref_qubits);
        put(o, "rel_dev", r.rel_dev);
        j.push_back(std::move(o));
    }
    return j;
}

std::string to_table(const std::vector<ReportRow> &rows) {
    const std::vector<std::string> head = {"model", "method", "strategy", "L",  "W",      "r",      "x",      "y",
                                           "z",     "tau",    "toffoli",  "qubits", "ref_tof", "ref_qb", "rel_dev"};
    std::vector<std::vector<std::string>> cells{head};
    for (const ReportRow &r : rows) {
        std::string dev = "-";
        if (r.rel_dev) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%+.1f%%", 100 * *r.rel_dev);
            dev = buf;
        }
        cells.push_back({r.model, r.method, r.strategy.empty() ? "-" : r.strategy, std::to_string(r.L),
                         r.W ? sig3(*r.W) : "-", sig3(r.r), sig3(r.x), sig3(r.y), sig3(r.z), sig3(r.tau),
                         sig3(r.toffoli), std::to_string(r.qubits), r.ref_toffoli ? sig3(*r.ref_toffoli) : "-",
                         sig3(r.ref_qubits), dev});
    }
    std::vector<size_t> width(head.size(), 0);
    for (const auto &line : cells) {
        for (size_t k = 0; k < line.size(); k++) {
            width[k] = std::max(width[k], line[k].size());
        }
    }
    std::string out;
    for (const auto &line : cells) {
        for (size_t k = 0; k < line.size(); k++) {
            out += line[k];
            if (k + 1 < line.size()) {
                out.append(width[k] - line[k].size() + 2, ' ');
            }
        }
        out += '\n';
    }
    return out;
}

double max_abs_rel_dev(const std::vector<ReportRow> &rows) {
    double m = 0;
    for (const ReportRow &r : rows) {
        if (r.rel_dev) {
            m = std::max(m, std::abs(*r.rel_dev));
        }
    }
    return m;
}

}  // namespace hre
