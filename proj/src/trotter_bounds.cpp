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

#include "hubbard_re/trotter_bounds.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hre {

namespace {

// Columns: L, ||H_nn,1 + H_nn,2|| / |t|, ||[[H_nn,1, H_nn,2], H_nn,1]|| / |t|^3.
constexpr const char *kEmbeddedFhNorms = R"(# L norm_hh norm_comm
4 24 0
6 56 110
8 100 190
10 160 300
12 230 440
14 320 630
16 410 810
18 520 1000
20 650 1300
22 780 1600
24 930 1800
26 1100 2200
28 1300 2500
30 1500 2900
32 1700 3300
)";

}  // namespace

const FhNormTable &FhNormTable::embedded() {
    static const FhNormTable table = [] {
        std::istringstream in(kEmbeddedFhNorms);
        return parse(in);
    }();
    return table;
}

FhNormTable FhNormTable::parse(std::istream &in) {
    FhNormTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (auto p = line.find('#'); p != std::string::npos) {
            line.resize(p);
        }
        std::istringstream ls(line);
        int L;
        FhNorms n;
        if (!(ls >> L)) {
            continue;
        }
        if (!(ls >> n.norm_hh >> n.norm_comm) || n.norm_hh < 0 || n.norm_comm < 0) {
            throw std::invalid_argument("FH norm table: bad row at line " + std::to_string(lineno));
        }
        t.rows_[L] = n;
    }
    if (t.rows_.empty()) {
        throw std::invalid_argument("FH norm table: no rows");
    }
    return t;
}

FhNormTable FhNormTable::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open FH norm table '" + path + "'");
    }
    return parse(in);
}

const FhNorms &FhNormTable::at(int L) const {
    auto it = rows_.find(L);
    if (it == rows_.end()) {
        throw std::out_of_range("no FH commutator norms tabulated for L=" + std::to_string(L));
    }
    return it->second;
}

std::string FhNormTable::to_text() const {
    std::ostringstream out;
    out << "# L norm_hh norm_comm\n";
    for (const auto &[L, n] : rows_) {
        out << L << ' ' << n.norm_hh << ' ' << n.norm_comm << '\n';
    }
    return out.str();
}

double fh_w(int L, double t, double u, const FhNormTable &table) {
    const FhNorms &n = table.at(L);
    t = std::abs(t);
    u = std::abs(u);
    const double L2 = double(L) * L;
    // norm_hh * t is ||H_nn,1 + H_nn,2||; the middle term is u^2/24 times it,
    // which keeps W cubic in (t, u).
    return u * t * t * L2 / 6 * (std::sqrt(5.0) + 8) + u * u / 24 * n.norm_hh * t + 3.0 / 24 * n.norm_comm * t * t * t;
}

double cuprate_w(int L, const Couplings &c) {
    const double T = std::abs(c.t), P = std::abs(c.t_prime), Q = std::abs(c.t_dprime), U = std::abs(c.u);
    const double poly = 0.5562 * T * T * T + 3.5166 * T * T * P + 1.0147 * T * T * Q + 1.2652 * T * T * U +
                        5.9063 * T * P * P + 6.6727 * T * P * Q + 2.7246 * T * P * U + 1.4832 * T * Q * Q +
                        2.4294 * T * Q * U + 0.2018 * T * U * U + 4.2510 * P * P * P + 5.7898 * P * P * Q +
                        2.2182 * P * P * U + 4.2787 * P * Q * Q + 2.8980 * P * Q * U + 0.3333 * P * U * U +
                        0.7688 * Q * Q * Q + 1.3761 * Q * Q * U + 0.2369 * Q * U * U;
    return double(L) * L * poly;
}

double pnictide_w(int L, const Couplings &c) {
    const double a = std::abs(c.t1), b = std::abs(c.t2), p = std::abs(c.t3), d = std::abs(c.t4);
    const double U = std::abs(c.u), V = std::abs(c.v);
    const double poly =
        // t1 terms
        0.25 * a * a * a + 1.3333 * a * a * p + 1.4524 * a * a * d + 0.3333 * a * a * U + 0.7233 * a * a * V +
        0.6667 * a * b * p + 1.9374 * a * b * d + 0.3398 * a * b * U + 1.037 * a * b * V + 2.6667 * a * p * p +
        5.6918 * a * p * d + 1.015 * a * p * U + 2.6200 * a * p * V + 4.2562 * a * d * d + 1.1301 * a * d * U +
        2.8315 * a * d * V + 0.0833 * a * U * U + 0.2506 * a * U * V + 3.8354 * a * V * V +
        // t2 terms
        0.25 * b * b * b + 1.3333 * b * b * p + 1.4524 * b * b * d + 0.3333 * b * b * U + 0.7363 * b * b * V +
        2.6667 * b * p * p + 5.6918 * b * p * d + 1.0151 * b * p * U + 2.5783 * b * p * V + 4.2562 * b * d * d +
        1.1279 * b * d * U + 2.7618 * b * d * V + 0.0833 * b * U * U + 0.2506 * b * U * V + 0.2397 * b * V * V +
        // t3, t4 terms
        2.8333 * p * p * p + 8.0 * p * p * d + 1.3333 * p * p * U + 2.7211 * p * p * V + 8.0 * p * d * d +
        2.3333 * p * d * U + 4.3035 * p * d * V + 0.1667 * p * U * U + 0.4714 * p * U * V + 0.4714 * p * V * V +
        2.8333 * d * d * d + 1.3333 * d * d * U + 2.7135 * d * d * V + 0.1667 * d * U * U + 0.4714 * d * U * V +
        0.4714 * d * V * V;
    return double(L) * L * poly;
}

double trotter_w(const ModelSpec &spec, const FhNormTable &table) {
    switch (spec.kind) {
        case ModelKind::FermiHubbard:
            return fh_w(spec.L, spec.c.t, spec.c.u, table);
        case ModelKind::Cuprate:
            return cuprate_w(spec.L, spec.c);
        case ModelKind::Pnictide:
            return pnictide_w(spec.L, spec.c);
    }
    return 0;
}

long trotter_steps(double W, double tau, const TrotterBudget &b) {
    if (!(tau > 0) || !(W >= 0)) {
        throw std::invalid_argument("trotter_steps: need tau > 0 and W >= 0");
    }
    const double denom = (1 - b.s()) * (1 - b.y) * b.delta_E;
    if (!(denom > 0)) {
        throw std::invalid_argument("trotter_steps: degenerate budget");
    }
    const double r = std::ceil(tau * std::sqrt(W / denom));
    return r < 1 ? 1 : long(r);
}

double tau_max(double W) {
    if (!(W > 0)) {
        throw std::invalid_argument("tau_max: W must be positive");
    }
    return std::cbrt(std::sqrt(2.0) / W);
}

}  // namespace hre
