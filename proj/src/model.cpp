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

#include "hubbard_re/model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hre {

Couplings Couplings::scaled(double s) const {
    Couplings r = *this;
    for (double *p : {&r.t, &r.t_prime, &r.t_dprime, &r.t1, &r.t2, &r.t3, &r.t4, &r.u, &r.v}) {
        *p *= s;
    }
    return r;
}

Couplings default_params(ModelKind kind) {
    Couplings c;
    switch (kind) {
        case ModelKind::FermiHubbard:
            c.t = 1;
            c.u = 8;
            break;
        case ModelKind::Cuprate:
            c.t = 1;
            c.t_prime = 0.3;
            c.t_dprime = 0.2;
            c.u = 8;
            break;
        case ModelKind::Pnictide:
            c.t1 = 1;
            c.t2 = 1.3;
            c.t3 = 0.85;
            c.t4 = 0.85;
            c.u = 8;
            c.v = 8;
            break;
    }
    return c;
}

ModelSpec default_spec(ModelKind kind, int L) {
    return ModelSpec{kind, L, default_params(kind)};
}

void validate(const ModelSpec &spec) {
    const int L = spec.L;
    if (L < 2) {
        throw std::invalid_argument("L must be at least 2, got " + std::to_string(L));
    }
    if (L % 2 != 0) {
        throw std::invalid_argument("L must be even, got " + std::to_string(L));
    }
    const Couplings &c = spec.c;
    for (double x : {c.t, c.t_prime, c.t_dprime, c.t1, c.t2, c.t3, c.t4, c.u, c.v}) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("couplings must be finite");
        }
    }
    double lead = spec.kind == ModelKind::Pnictide ? c.t1 : c.t;
    if (lead == 0) {
        throw std::invalid_argument("leading hopping must be nonzero");
    }
}

void validate_trotter(const ModelSpec &spec) {
    validate(spec);
    if (spec.kind == ModelKind::Cuprate && spec.L % 4 != 0) {
        throw std::invalid_argument("cuprate Trotter scheme needs L a multiple of 4, got " +
                                    std::to_string(spec.L));
    }
}

double extensive_error(int L) {
    if (L < 2) {
        throw std::invalid_argument("extensive_error: L must be at least 2");
    }
    return 0.0051 * double(L) * double(L);
}

double lambda(const ModelSpec &spec) {
    const Couplings &c = spec.c;
    double L2 = double(spec.L) * double(spec.L);
    switch (spec.kind) {
        case ModelKind::FermiHubbard:
            return L2 * (4 * std::abs(c.t) + std::abs(c.u) / 4);
        case ModelKind::Cuprate:
            return L2 * (4 * (std::abs(c.t) + std::abs(c.t_prime) + std::abs(c.t_dprime)) + std::abs(c.u) / 4);
        case ModelKind::Pnictide:
            return L2 * (4 * (std::abs(c.t1) + std::abs(c.t2)) + 8 * (std::abs(c.t3) + std::abs(c.t4)) +
                         std::abs(c.u) / 2 + std::abs(c.v));
    }
    return 0;
}

int system_qubits(ModelKind kind, int L) {
    return (kind == ModelKind::Pnictide ? 4 : 2) * L * L;
}

std::string_view model_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::FermiHubbard:
            return "fh";
        case ModelKind::Cuprate:
            return "cuprate";
        case ModelKind::Pnictide:
            return "pnictide";
    }
    return "?";
}

ModelKind parse_model(std::string_view name) {
    if (name == "fh" || name == "fermi-hubbard" || name == "hubbard") {
        return ModelKind::FermiHubbard;
    }
    if (name == "cuprate" || name == "cu") {
        return ModelKind::Cuprate;
    }
    if (name == "pnictide" || name == "pn") {
        return ModelKind::Pnictide;
    }
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

void set_coupling(Couplings &c, std::string_view name, double value) {
    struct Field {
        std::string_view key;
        double Couplings::*member;
    };
    static constexpr Field fields[] = {
        {"t", &Couplings::t},   {"t_prime", &Couplings::t_prime}, {"t_dprime", &Couplings::t_dprime},
        {"t1", &Couplings::t1}, {"t2", &Couplings::t2},           {"t3", &Couplings::t3},
        {"t4", &Couplings::t4}, {"u", &Couplings::u},             {"v", &Couplings::v},
    };
    for (const Field &f : fields) {
        if (f.key == name) {
            c.*f.member = value;
            return;
        }
    }
    throw std::invalid_argument("unknown coupling '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_number(std::string_view key, std::string_view v) {
    double out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw std::invalid_argument("config: bad value for '" + std::string(key) + "'");
    }
    return out;
}

}  // namespace

ModelConfig parse_model_config(std::string_view text) {
    ModelConfig cfg;
    int lineno = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        lineno++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto sep = line.find_first_of("=:");
        if (sep == std::string_view::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string_view key = trim(line.substr(0, sep));
        std::string_view val = trim(line.substr(sep + 1));
        if (key == "model") {
            cfg.kind = parse_model(val);
        } else if (key == "L") {
            double L = parse_number(key, val);
            if (L != std::floor(L)) {
                throw std::invalid_argument("config: L must be an integer");
            }
            cfg.L = int(L);
        } else if (key == "delta_E_override") {
            cfg.delta_E_override = parse_number(key, val);
        } else {
            Couplings probe;
            set_coupling(probe, key, 0.0);
            cfg.couplings[std::string(key)] = parse_number(key, val);
        }
    }
    return cfg;
}

ModelConfig load_model_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model_config(ss.str());
}

}  // namespace hre
