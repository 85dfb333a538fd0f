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

#include "hubbard_re/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace hre {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Scaler {
    const SearchSpace &space;

    double lo(size_t i) const {
        const Dimension &d = space.dims[i];
        return d.scale == Scale::Log ? std::log(d.lower) : d.lower;
    }
    double hi(size_t i) const {
        const Dimension &d = space.dims[i];
        return d.scale == Scale::Log ? std::log(d.upper) : d.upper;
    }
    Point to_real(const Point &u) const {
        Point p(u.size());
        for (size_t i = 0; i < u.size(); i++) {
            p[i] = space.dims[i].scale == Scale::Log ? std::exp(u[i]) : u[i];
        }
        return p;
    }
    Point to_scaled(const Point &p) const {
        Point u(p.size());
        for (size_t i = 0; i < p.size(); i++) {
            u[i] = space.dims[i].scale == Scale::Log ? std::log(p[i]) : p[i];
        }
        return u;
    }
};

class Counted {
   public:
    Counted(const Objective &f, const SearchSpace &space) : f_(f), space_(space), scaler_{space} {}

    double operator()(const Point &u) {
        for (size_t i = 0; i < u.size(); i++) {
            if (!(u[i] > scaler_.lo(i) && u[i] < scaler_.hi(i))) {
                return kInf;
            }
        }
        Point p = scaler_.to_real(u);
        if (space_.constraint && !space_.constraint(p)) {
            return kInf;
        }
        evals++;
        double v = f_(p);
        return std::isnan(v) ? kInf : v;
    }

    long evals = 0;

   private:
    const Objective &f_;
    const SearchSpace &space_;
    Scaler scaler_;
};

struct Candidate {
    Point u;
    double v;
};

// Nelder-Mead on scaled coordinates. Returns the best vertex.
Candidate nelder_mead(Counted &f, const Candidate &start, const Scaler &sc, const MinimizeConfig &cfg,
                      std::mt19937_64 *rng) {
    const size_t n = start.u.size();
    std::vector<Candidate> simplex;
    simplex.push_back(start);
    for (size_t i = 0; i < n; i++) {
        Point u = start.u;
        double step = cfg.initial_step * (sc.hi(i) - sc.lo(i));
        if (rng != nullptr && ((*rng)() & 1)) {
            step = -step;
        }
        u[i] += step;
        double v = f(u);
        if (!std::isfinite(v)) {
            u[i] = start.u[i] - step;
            v = f(u);
        }
        if (!std::isfinite(v)) {
            // Shrink toward the start until feasible or tiny.
            double s = step;
            for (int k = 0; k < 30 && !std::isfinite(v); k++) {
                s *= 0.5;
                u[i] = start.u[i] + s;
                v = f(u);
            }
        }
        simplex.push_back({u, v});
    }

    auto order = [&]() {
        std::stable_sort(simplex.begin(), simplex.end(), [](const Candidate &a, const Candidate &b) { return a.v < b.v; });
    };
    int used = 0;
    while (used < cfg.max_evals_per_start) {
        order();
        double fbest = simplex.front().v;
        double fworst = simplex.back().v;
        double size = 0;
        for (size_t k = 1; k <= n; k++) {
            for (size_t i = 0; i < n; i++) {
                size = std::max(size, std::abs(simplex[k].u[i] - simplex[0].u[i]));
            }
        }
        if (size < cfg.xtol) {
            break;
        }
        if (std::isfinite(fworst) && std::abs(fworst - fbest) <= cfg.ftol * std::max(1.0, std::abs(fbest))) {
            break;
        }

        Point centroid(n, 0.0);
        for (size_t k = 0; k < n; k++) {
            for (size_t i = 0; i < n; i++) {
                centroid[i] += simplex[k].u[i] / double(n);
            }
        }
        auto along = [&](double t) {
            Point p(n);
            for (size_t i = 0; i < n; i++) {
                p[i] = centroid[i] + t * (simplex[n].u[i] - centroid[i]);
            }
            return p;
        };

        Point xr = along(-1.0);
        double fr = f(xr);
        used++;
        if (fr < simplex[0].v) {
            Point xe = along(-2.0);
            double fe = f(xe);
            used++;
            simplex[n] = fe < fr ? Candidate{xe, fe} : Candidate{xr, fr};
            continue;
        }
        if (fr < simplex[n - 1].v) {
            simplex[n] = {xr, fr};
            continue;
        }
        bool outside = fr < simplex[n].v;
        Point xc = along(outside ? -0.5 : 0.5);
        double fc = f(xc);
        used++;
        if (fc < (outside ? fr : simplex[n].v)) {
            simplex[n] = {xc, fc};
            continue;
        }
        for (size_t k = 1; k <= n; k++) {
            for (size_t i = 0; i < n; i++) {
                simplex[k].u[i] = simplex[0].u[i] + 0.5 * (simplex[k].u[i] - simplex[0].u[i]);
            }
            simplex[k].v = f(simplex[k].u);
            used++;
        }
    }
    order();
    return simplex.front();
}

}  // namespace

MinimizeResult minimize(const Objective &f, const SearchSpace &space, const MinimizeConfig &config) {
    const size_t n = space.dims.size();
    for (const Dimension &d : space.dims) {
        if (!(d.lower < d.upper) || (d.scale == Scale::Log && d.lower <= 0)) {
            throw std::invalid_argument("minimize: invalid dimension bounds");
        }
    }
    Scaler sc{space};
    Counted g(f, space);

    std::vector<Candidate> cands;
    // Cell-centred product grid.
    std::vector<int> idx(n, 0);
    bool grid = n > 0 && std::all_of(space.dims.begin(), space.dims.end(), [](const Dimension &d) { return d.grid_points > 0; });
    while (grid) {
        Point u(n);
        for (size_t i = 0; i < n; i++) {
            int m = space.dims[i].grid_points;
            u[i] = sc.lo(i) + (idx[i] + 0.5) * (sc.hi(i) - sc.lo(i)) / m;
        }
        cands.push_back({u, g(u)});
        size_t i = 0;
        for (; i < n; i++) {
            if (++idx[i] < space.dims[i].grid_points) {
                break;
            }
            idx[i] = 0;
        }
        if (i == n) {
            break;
        }
    }
    for (const Point &p : config.seeds) {
        if (p.size() != n) {
            throw std::invalid_argument("minimize: seed dimension mismatch");
        }
        bool positive = true;
        for (size_t i = 0; i < n; i++) {
            positive = positive && (space.dims[i].scale == Scale::Linear || p[i] > 0);
        }
        if (!positive) {
            continue;
        }
        Point u = sc.to_scaled(p);
        cands.push_back({u, g(u)});
    }

    std::stable_sort(cands.begin(), cands.end(), [](const Candidate &a, const Candidate &b) { return a.v < b.v; });
    if (cands.empty() || !std::isfinite(cands.front().v)) {
        throw InfeasibleError("minimize: no feasible point");
    }

    Candidate best = cands.front();
    std::mt19937_64 rng(config.seed);
    std::mt19937_64 *rp = config.seed == 0 ? nullptr : &rng;
    int started = 0;
    std::vector<Point> refined;
    for (const Candidate &c : cands) {
        if (started >= config.refine_starts || !std::isfinite(c.v)) {
            break;
        }
        if (std::find(refined.begin(), refined.end(), c.u) != refined.end()) {
            continue;
        }
        refined.push_back(c.u);
        started++;
        Candidate r = nelder_mead(g, c, sc, config, rp);
        if (r.v < best.v) {
            best = r;
        }
    }
    return MinimizeResult{sc.to_real(best.u), best.v, g.evals};
}

MinimizeResult minimize_scalar(const std::function<double(double)> &f, double lo, double hi, int grid_points,
                               double xtol) {
    if (!(lo < hi) || grid_points < 3) {
        throw std::invalid_argument("minimize_scalar: invalid bracket");
    }
    long evals = 0;
    auto eval = [&](double x) {
        evals++;
        double v = f(x);
        return std::isnan(v) ? kInf : v;
    };
    double h = (hi - lo) / grid_points;
    int best_i = -1;
    double best_v = kInf;
    std::vector<double> vals(grid_points);
    for (int i = 0; i < grid_points; i++) {
        vals[i] = eval(lo + (i + 0.5) * h);
        if (vals[i] < best_v) {
            best_v = vals[i];
            best_i = i;
        }
    }
    if (best_i < 0) {
        throw InfeasibleError("minimize_scalar: no feasible point");
    }
    double a = std::max(lo, lo + (best_i - 0.5) * h);
    double b = std::min(hi, lo + (best_i + 1.5) * h);
    const double invphi = (std::sqrt(5.0) - 1) / 2;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > xtol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = eval(d);
        }
    }
    double x = fc < fd ? c : d;
    double v = std::min(fc, fd);
    double xg = lo + (best_i + 0.5) * h;
    if (best_v < v) {
        x = xg;
        v = best_v;
    }
    return MinimizeResult{{x}, v, evals};
}

}  // namespace hre
