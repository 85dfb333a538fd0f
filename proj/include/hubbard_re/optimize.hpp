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

#ifndef HUBBARD_RE_OPTIMIZE_HPP
#define HUBBARD_RE_OPTIMIZE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hre {

using Point = std::vector<double>;
using Objective = std::function<double(const Point &)>;

enum class Scale { Linear, Log };

struct Dimension {
    double lower = 0;
    double upper = 1;
    Scale scale = Scale::Linear;
    /// Cell-centred grid points; bounds are treated as open.
    int grid_points = 9;
};

struct SearchSpace {
    std::vector<Dimension> dims;
    /// Optional feasibility predicate; infeasible points evaluate to +inf.
    std::function<bool(const Point &)> constraint;
};

struct MinimizeConfig {
    /// Extra starting candidates evaluated alongside the grid.
    std::vector<Point> seeds;
    /// Number of best distinct candidates refined by Nelder-Mead.
    int refine_starts = 4;
    int max_evals_per_start = 4000;
    /// Simplex size tolerance in scaled coordinates.
    double xtol = 1e-10;
    /// Relative spread of simplex values.
    double ftol = 1e-13;
    /// Initial simplex step as a fraction of each scaled dimension.
    double initial_step = 0.05;
    /// 0 gives the canonical axis-aligned simplex; other values rotate the
    /// step signs deterministically.
    std::uint64_t seed = 0;
};

struct MinimizeResult {
    Point point;
    double value = 0;
    long evaluations = 0;
};

class InfeasibleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Coarse grid (plus seeds), then Nelder-Mead with the classical
/// coefficients (1, 2, 0.5, 0.5) on the scaled coordinates. Throws
/// InfeasibleError when no candidate is finite.
MinimizeResult minimize(const Objective &f, const SearchSpace &space, const MinimizeConfig &config = {});

/// Grid over (lo, hi) followed by golden-section refinement of the best
/// bracket. Deterministic.
MinimizeResult minimize_scalar(const std::function<double(double)> &f, double lo, double hi, int grid_points = 64,
                               double xtol = 1e-12);

}  // namespace hre

#endif
