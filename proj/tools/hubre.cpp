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

// hubre: resource estimates for Hubbard-type lattice models.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hubbard_re/circuitlab.hpp"
#include "hubbard_re/model.hpp"
#include "hubbard_re/optimize.hpp"
#include "hubbard_re/qubitization.hpp"
#include "hubbard_re/report.hpp"
#include "hubbard_re/trotter_bounds.hpp"
#include "hubbard_re/trotter_cost.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Settings {
    std::string format = "table";
    std::string output;
    std::uint64_t seed = 0;
    bool amortize = false;
    bool printed_pnictide_layers = false;
    bool printed_log_ceiling = false;
    std::string config;
    std::string fh_norms;
    unsigned threads = 0;

    std::string model;
    std::string method = "trotter";
    std::string strategy;
    std::optional<int> L;
    int L_min = 4, L_max = 32, L_step = 0;
    std::optional<double> delta_E;
    std::map<std::string, double> couplings;
    std::string table;
};

void write_output(const Settings &s, const std::string &text) {
    if (s.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(s.output, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + s.output + "'");
    }
    out << text;
}

std::string render(const Settings &s, const std::vector<hre::ReportRow> &rows) {
    if (s.format == "csv") {
        return hre::to_csv(rows);
    }
    if (s.format == "json") {
        return hre::to_json(rows).dump(2) + "\n";
    }
    return hre::to_table(rows);
}

struct Resolved {
    hre::ModelSpec spec;
    double delta_E = 0;
    bool default_couplings = true;
};

// Config file first, command-line flags on top.
Resolved resolve(const Settings &s, int L) {
    hre::ModelConfig cfg;
    if (!s.config.empty()) {
        cfg = hre::load_model_config(s.config);
    }
    std::optional<hre::ModelKind> kind = cfg.kind;
    if (!s.model.empty()) {
        kind = hre::parse_model(s.model);
    }
    if (!kind) {
        throw UsageError("no model given (use --model or a config file)");
    }
    Resolved r;
    r.spec = hre::default_spec(*kind, L);
    for (const auto &[k, v] : cfg.couplings) {
        hre::set_coupling(r.spec.c, k, v);
    }
    for (const auto &[k, v] : s.couplings) {
        hre::set_coupling(r.spec.c, k, v);
    }
    r.default_couplings = r.spec.c == hre::default_params(*kind);
    if (s.delta_E) {
        r.delta_E = *s.delta_E;
    } else if (cfg.delta_E_override) {
        r.delta_E = *cfg.delta_E_override;
    }
    return r;
}

int config_L(const Settings &s) {
    if (s.L) {
        return *s.L;
    }
    if (!s.config.empty()) {
        if (auto L = hre::load_model_config(s.config).L) {
            return *L;
        }
    }
    throw UsageError("no lattice size given (use --L or a config file)");
}

hre::TrotterOptions trotter_options(const Settings &s, double delta_E) {
    hre::TrotterOptions o;
    o.amortize_catalyst = s.amortize;
    o.printed_pnictide_layers = s.printed_pnictide_layers;
    o.seed = s.seed;
    o.delta_E = delta_E;
    return o;
}

std::vector<hre::TrotterStrategy> strategies(const std::string &name, bool default_all) {
    if (name == "all" || (name.empty() && default_all)) {
        return {std::begin(hre::kAllStrategies), std::end(hre::kAllStrategies)};
    }
    return {hre::parse_strategy(name.empty() ? "catalyzed" : name)};
}

std::vector<hre::ReportRow> estimate_rows(const Settings &s, int L, bool default_all) {
    const hre::Method method = hre::parse_method(s.method);
    Resolved r = resolve(s, L);
    const bool compare = r.default_couplings && r.delta_E <= 0;
    std::vector<hre::ReportRow> rows;
    if (method == hre::Method::Qubitization) {
        hre::validate(r.spec);
        if (!s.strategy.empty()) {
            throw UsageError("--strategy only applies to the trotter method");
        }
        hre::QubitizationOptions qo;
        qo.printed_log_ceiling = s.printed_log_ceiling;
        rows.push_back(hre::qubitization_row(r.spec, hre::optimize_qubitization(r.spec, r.delta_E, qo)));
    } else {
        hre::validate_trotter(r.spec);
        hre::FhNormTable norms = s.fh_norms.empty() ? hre::FhNormTable::embedded() : hre::FhNormTable::load(s.fh_norms);
        for (hre::TrotterStrategy st : strategies(s.strategy, default_all)) {
            rows.push_back(hre::trotter_row(r.spec, hre::optimize_trotter(r.spec, st, trotter_options(s, r.delta_E), norms)));
        }
    }
    if (compare) {
        for (auto &row : rows) {
            hre::attach_reference(row);
        }
    }
    return rows;
}

int cmd_estimate(const Settings &s) {
    write_output(s, render(s, estimate_rows(s, config_L(s), false)));
    return 0;
}

int cmd_sweep(const Settings &s) {
    Settings one = s;
    int step = s.L_step;
    if (step <= 0) {
        Resolved r = resolve(s, 4);
        step = (r.spec.kind == hre::ModelKind::Cuprate && hre::parse_method(s.method) == hre::Method::Trotter) ? 4 : 2;
    }
    if (s.L_min > s.L_max) {
        throw UsageError("--L-min exceeds --L-max");
    }
    std::vector<hre::ReportRow> rows;
    for (int L = s.L_min; L <= s.L_max; L += step) {
        auto part = estimate_rows(one, L, true);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    write_output(s, render(s, rows));
    return 0;
}

int cmd_reproduce(const Settings &s) {
    const std::string prefix = "supp-table-";
    if (s.table.rfind(prefix, 0) != 0 || s.table.size() != prefix.size() + 1) {
        throw UsageError("expected supp-table-1 .. supp-table-6, got '" + s.table + "'");
    }
    const int n = s.table.back() - '0';
    if (n < 1 || n > 6) {
        throw UsageError("expected supp-table-1 .. supp-table-6, got '" + s.table + "'");
    }
    hre::ReproduceOptions opt;
    if (!s.strategy.empty() && s.strategy != "all") {
        if (n <= 3) {
            throw UsageError("--strategy only applies to supp-table-4 .. supp-table-6");
        }
        opt.strategy = hre::parse_strategy(s.strategy);
    }
    opt.trotter = trotter_options(s, 0);
    opt.qubitization.printed_log_ceiling = s.printed_log_ceiling;
    opt.threads = s.threads;
    hre::FhNormTable norms;
    if (!s.fh_norms.empty()) {
        norms = hre::FhNormTable::load(s.fh_norms);
        opt.fh_norms = &norms;
    }
    const auto rows = hre::reproduce_table(n, opt);
    const double dev = hre::max_abs_rel_dev(rows);
    std::string text;
    if (s.format == "json") {
        nlohmann::ordered_json j;
        j["table"] = s.table;
        j["rows"] = hre::to_json(rows);
        j["max_abs_rel_dev"] = dev;
        text = j.dump(2) + "\n";
    } else {
        text = render(s, rows);
        if (s.format == "table") {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%zu rows, max |rel_dev| %.2f%%\n", rows.size(), 100 * dev);
            text += buf;
        }
    }
    write_output(s, text);
    return 0;
}

int cmd_verify(const Settings &s) {
    const auto checks = hre::circuitlab::run_verification_suite();
    bool ok = true;
    std::string text;
    if (s.format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto &c : checks) {
            j.push_back({{"check", c.name}, {"max_deviation", c.deviation}, {"tolerance", c.tolerance},
                         {"pass", c.pass}});
            ok = ok && c.pass;
        }
        text = j.dump(2) + "\n";
    } else {
        for (const auto &c : checks) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s %-36s max_dev %.3e tol %.1e\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                          c.deviation, c.tolerance);
            text += buf;
            ok = ok && c.pass;
        }
    }
    write_output(s, text);
    return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fault-tolerant resource estimates for Fermi-Hubbard, cuprate and pnictide lattices"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;

    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
    app.add_option("-o,--output", s.output, "Write to this file instead of stdout");
    app.add_option("--seed", s.seed, "Optimizer seed (0 = canonical starts)");
    app.add_flag("--amortize-catalyst", s.amortize, "Charge catalyst synthesis once, not per query");
    app.add_flag("--printed-pnictide-layers", s.printed_pnictide_layers,
                 "Pnictide: use the 11r multiplier on the 2L^2 layers");
    app.add_flag("--printed-log-ceiling", s.printed_log_ceiling,
                 "Qubitization: ceil(log2 L) in the non-binary Toffoli term");
    app.add_option("--config", s.config, "Key-value file with model, L, couplings, delta_E_override");
    app.add_option("--fh-norms", s.fh_norms, "Replacement Fermi-Hubbard norm table (L norm_hh norm_comm)");
    app.add_option("--threads", s.threads, "Worker threads for reproduce (0 = all cores)");

    auto model_flags = [&](CLI::App *sub) {
        sub->add_option("--model", s.model, "fh, cuprate or pnictide");
        sub->add_option("--method", s.method, "qubitization or trotter")
            ->check(CLI::IsMember({"qubitization", "trotter"}));
        sub->add_option("--strategy", s.strategy, "catalyzed, baseline, batched-catalyzed, batched-baseline or all");
        sub->add_option("--delta-E", s.delta_E, "Total energy error (default 0.0051 L^2)");
        for (const char *name : {"t", "t_prime", "t_dprime", "t1", "t2", "t3", "t4", "u", "v"}) {
            std::string key = name;
            std::string flag = "--" + key;
            for (char &ch : flag) {
                if (ch == '_') {
                    ch = '-';
                }
            }
            sub->add_option_function<double>(flag, [&s, key](double v) { s.couplings[key] = v; },
                                             "Override coupling " + key);
        }
    };

    auto *estimate = app.add_subcommand("estimate", "One estimate at a single L");
    model_flags(estimate);
    estimate->add_option("--L", s.L, "Lattice linear dimension");

    auto *sweep = app.add_subcommand("sweep", "One row per L over a range");
    model_flags(sweep);
    sweep->add_option("--L-min", s.L_min, "First L");
    sweep->add_option("--L-max", s.L_max, "Last L");
    sweep->add_option("--L-step", s.L_step, "L increment (default 2, or 4 for cuprate Trotter)");

    auto *reproduce = app.add_subcommand("reproduce", "Regenerate a reference table with deviations");
    reproduce->add_option("table", s.table, "supp-table-1 .. supp-table-6")->required();
    reproduce->add_option("--strategy", s.strategy, "Restrict Trotter tables to one strategy");

    auto *verify = app.add_subcommand("verify", "Run the circuit gadget verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*estimate) {
            return cmd_estimate(s);
        }
        if (*sweep) {
            return cmd_sweep(s);
        }
        if (*reproduce) {
            return cmd_reproduce(s);
        }
        if (*verify) {
            return cmd_verify(s);
        }
    } catch (const hre::InfeasibleError &e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
