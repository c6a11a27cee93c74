#include "mlfit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mlfit {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

struct RunResult {
    std::vector<double> x;
    double f;
    std::size_t iterations;
    bool converged;
};

// One simplex search (no restarts).
RunResult run_simplex(const Objective& objective, std::span<const double> x0,
                      const SimplexConfig& cfg) {
    const std::size_t n = x0.size();

    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back({{x0.begin(), x0.end()}, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> v(x0.begin(), x0.end());
        v[i] = v[i] != 0.0 ? v[i] * 1.05 : 0.00025;
        simplex.push_back({std::move(v), 0.0});
    }
    for (Vertex& v : simplex) v.f = objective(v.x);

    auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    std::stable_sort(simplex.begin(), simplex.end(), by_value);

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    std::size_t iter = 0;
    bool converged = false;

    while (iter < cfg.max_iter) {
        // Convergence: coordinate and value spread relative to the best vertex.
        double x_spread = 0.0, f_spread = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            f_spread = std::max(f_spread, std::fabs(simplex[i].f - simplex[0].f));
            for (std::size_t j = 0; j < n; ++j) {
                x_spread = std::max(x_spread,
                                    std::fabs(simplex[i].x[j] - simplex[0].x[j]));
            }
        }
        if (x_spread < cfg.x_tol && f_spread < cfg.f_tol) {
            converged = true;
            break;
        }
        ++iter;

        // Centroid of all vertices but the worst.
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i].x[j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        const Vertex& worst = simplex[n];
        auto along = [&](std::vector<double>& out, double t) {
            for (std::size_t j = 0; j < n; ++j) {
                out[j] = centroid[j] + t * (centroid[j] - worst.x[j]);
            }
        };

        along(xr, cfg.reflection);
        const double fr = objective(xr);

        bool shrink = false;
        if (fr < simplex[0].f) {
            along(xe, cfg.expansion);
            const double fe = objective(xe);
            if (fe < fr) {
                simplex[n] = {xe, fe};
            } else {
                simplex[n] = {xr, fr};
            }
        } else if (fr < simplex[n - 1].f) {
            simplex[n] = {xr, fr};
        } else if (fr < worst.f) {
            along(xc, cfg.contraction);  // outside contraction
            const double fc = objective(xc);
            if (fc <= fr) {
                simplex[n] = {xc, fc};
            } else {
                shrink = true;
            }
        } else {
            along(xc, -cfg.contraction);  // inside contraction
            const double fc = objective(xc);
            if (fc < worst.f) {
                simplex[n] = {xc, fc};
            } else {
                shrink = true;
            }
        }

        if (shrink) {
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    simplex[i].x[j] = simplex[0].x[j] +
                                      cfg.shrink * (simplex[i].x[j] - simplex[0].x[j]);
                }
                simplex[i].f = objective(simplex[i].x);
            }
        }
        std::stable_sort(simplex.begin(), simplex.end(), by_value);
    }

    return {std::move(simplex[0].x), simplex[0].f, iter, converged};
}

}  // namespace

void SimplexConfig::validate() const {
    if (!(reflection > 0.0) || !(expansion > reflection) ||
        !(contraction > 0.0 && contraction < 1.0) ||
        !(shrink > 0.0 && shrink < 1.0) || !(x_tol > 0.0) || !(f_tol > 0.0) ||
        max_iter < 1) {
        throw DomainError("SimplexConfig: coefficient or tolerance out of range");
    }
}

OptimResult nelder_mead(const Objective& objective, std::span<const double> x0,
                        const SimplexConfig& config) {
    config.validate();
    if (x0.empty()) {
        throw DomainError("nelder_mead: dimension must be >= 1");
    }

    RunResult best = run_simplex(objective, x0, config);
    std::size_t total_iter = best.iterations;
    bool converged = best.converged;

    if (converged) {
        for (std::size_t r = 0; r < config.restarts; ++r) {
            RunResult again = run_simplex(objective, best.x, config);
            total_iter += again.iterations;
            converged = converged && again.converged;
            if (again.f < best.f) best = std::move(again);
        }
    }

    OptimResult result;
    result.best_params = std::move(best.x);
    result.best_value = best.f;
    result.iterations = total_iter;
    result.converged = converged;
    result.start_index = 0;
    return result;
}

OptimResult multi_start(const Objective& objective,
                        std::span<const std::vector<double>> starts,
                        const SimplexConfig& config) {
    if (starts.empty()) {
        throw DomainError("multi_start: starts must be non-empty");
    }
    OptimResult best;
    bool have = false;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        OptimResult r = nelder_mead(objective, starts[i], config);
        r.start_index = i;
        if (!have || r.best_value < best.best_value) {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

}  // namespace mlfit
