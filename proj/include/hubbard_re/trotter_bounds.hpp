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

#ifndef HUBBARD_RE_TROTTER_BOUNDS_HPP
#define HUBBARD_RE_TROTTER_BOUNDS_HPP

#include <istream>
#include <map>
#include <string>

#include "hubbard_re/model.hpp"

namespace hre {

/// Norms of the Fermi-Hubbard hopping layers, stored divided by |t| and
/// |t|^3 respectively.
struct FhNorms {
    double norm_hh = 0;
    double norm_comm = 0;
};

/// Text format: one "L norm_hh norm_comm" triple per line; '#' starts a
/// comment.
class FhNormTable {
   public:
    static const FhNormTable &embedded();
    static FhNormTable parse(std::istream &in);
    static FhNormTable load(const std::string &path);

    /// Throws std::out_of_range for an untabulated L.
    const FhNorms &at(int L) const;
    bool contains(int L) const { return rows_.count(L) != 0; }
    const std::map<int, FhNorms> &rows() const { return rows_; }
    std::string to_text() const;

   private:
    std::map<int, FhNorms> rows_;
};

struct TrotterBudget {
    double delta_E = 0;
    double x = 0;
    double y = 0;
    double z = 0;
    double tau = 0;

    double s() const { return x + z; }
};

double fh_w(int L, double t, double u, const FhNormTable &table = FhNormTable::embedded());
double cuprate_w(int L, const Couplings &c);
double pnictide_w(int L, const Couplings &c);
/// Dispatches on spec.kind.
double trotter_w(const ModelSpec &spec, const FhNormTable &table = FhNormTable::embedded());

/// r = max(1, ceil(tau sqrt(W / ((1-s)(1-y) dE)))).
long trotter_steps(double W, double tau, const TrotterBudget &budget);
/// (sqrt(2)/W)^(1/3).
double tau_max(double W);

}  // namespace hre

#endif
