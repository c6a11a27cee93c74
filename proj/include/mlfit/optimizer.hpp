#pragma once

// Derivative-free minimization by the Nelder-Mead simplex method, with
// restart-from-best and multi-start selection.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mlfit/errors.hpp"

namespace mlfit {

struct SimplexConfig {
    double reflection = 1.0;
    double expansion = 2.0;   // must exceed reflection
    double contraction = 0.5; // in (0,1)
    double shrink = 0.5;      // in (0,1)
    double x_tol = 1e-8;      // simplex coordinate-spread threshold
    double f_tol = 1e-8;      // simplex value-spread threshold
    std::size_t max_iter = 2000;  // per simplex run
    std::size_t restarts = 2;     // re-runs from the incumbent best

    void validate() const;  // throws DomainError
};

struct OptimResult {
    std::vector<double> best_params;
    double best_value = 0.0;  // objective(best_params), as last evaluated
    std::size_t iterations = 0;
    bool converged = false;
    std::size_t start_index = 0;  // which multi_start entry produced this
};

using Objective = std::function<double(std::span<const double>)>;

// Minimizes `objective` from `x0`.  The objective must be total over the
// search region (return a large-but-finite penalty rather than throw).
// The initial simplex perturbs each coordinate by 5% (0.00025 if zero).
// After convergence the search restarts from the incumbent best
// `config.restarts` times, keeping a restart only if it improves.
// Non-convergence is reported via converged = false, not an exception.
OptimResult nelder_mead(const Objective& objective, std::span<const double> x0,
                        const SimplexConfig& config = {});

// Runs nelder_mead from every start and returns the result with the
// smallest best_value; exact ties go to the smallest start index.
OptimResult multi_start(const Objective& objective,
                        std::span<const std::vector<double>> starts,
                        const SimplexConfig& config = {});

}  // namespace mlfit
