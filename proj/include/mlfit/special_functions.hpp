#pragma once

// Gamma, Pochhammer symbols, and the one-, two-, three- (Prabhakar), and
// four-parameter (Shukla-Prajapati) Mittag-Leffler functions for real
// arguments.  All series share one summation core; everything here is a pure
// function of its inputs and safe to call concurrently.

#include <cstddef>
#include <memory>

#include "mlfit/errors.hpp"

namespace mlfit {

// Truncation and safety controls for Mittag-Leffler series evaluation.
//
// The series stops at the first k >= 2 whose term and predecessor both
// satisfy |term| < rel_tol*|partial sum| + abs_tol (two consecutive small
// terms, so alternating-series plateaus do not truncate early).
struct SeriesPolicy {
    double rel_tol = 1e-15;
    double abs_tol = 1e-300;
    std::size_t max_terms = 10000;
    double max_abs_arg = 100.0;  // guard on |z|; larger arguments are refused

    void validate() const;  // throws DomainError on nonsense settings
};

// Parameters of E_{alpha,beta}.  alpha > 0, beta > 0.
struct MLTwoParams {
    double alpha;
    double beta;
};

// Parameters of the Prabhakar function E^{gamma}_{alpha,beta}.
struct PrabhakarParams {
    double alpha;
    double beta;
    double gamma;  // any nonzero real
};

// Parameters of the Shukla-Prajapati function E^{gamma,q}_{alpha,beta}.
struct ShuklaParams {
    double alpha;
    double beta;
    double gamma;  // > 0
    double q;      // in (0,1) or a positive integer
};

// Gamma(x) for real x that is not zero or a negative integer.
// Relative error <= 1e-13 on [0.1, 170].
// Throws PoleError at non-positive integers, OverflowError for x > 171.624.
double gamma(double x);

// 1/Gamma(x).  Total: returns exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

// Rising factorial (g)_k = g(g+1)...(g+k-1), computed by the product
// recurrence; (g)_0 = 1.
double pochhammer(double g, unsigned k);

// Generalized Pochhammer symbol (g)_{qk} = Gamma(g + q*k)/Gamma(g).
// Integer offsets q*k reduce to the plain rising factorial; otherwise the
// value comes from log-Gamma differences.  Throws PoleError when the
// numerator sits on a pole that the denominator does not cancel.
double generalized_pochhammer(double g, double q, unsigned k);

// E_alpha(z) = sum z^k / Gamma(alpha*k + 1).  Same code path as ml_two with
// beta = 1.
double ml_one(double alpha, double z, const SeriesPolicy& policy = {});

// E_{alpha,beta}(z) = sum z^k / Gamma(alpha*k + beta).
double ml_two(const MLTwoParams& p, double z, const SeriesPolicy& policy = {});

// E^{gamma}_{alpha,beta}(z) = sum (gamma)_k z^k / (Gamma(alpha*k + beta) k!).
double ml_prabhakar(const PrabhakarParams& p, double z,
                    const SeriesPolicy& policy = {});

// E^{gamma,q}_{alpha,beta}(z) = sum (gamma)_{qk} z^k / (Gamma(alpha*k+beta) k!).
double ml_shukla(const ShuklaParams& p, double z,
                 const SeriesPolicy& policy = {});

// Repeated E_{alpha,beta} evaluation at fixed parameters.  Caches the
// 1/Gamma(alpha*k + beta) coefficient table, which dominates the cost of a
// single-shot ml_two call.  Instances are movable but not thread-safe;
// create one per thread.
class MlTwoEvaluator {
  public:
    MlTwoEvaluator(MLTwoParams params, SeriesPolicy policy = {});
    ~MlTwoEvaluator();
    MlTwoEvaluator(MlTwoEvaluator&&) noexcept;
    MlTwoEvaluator& operator=(MlTwoEvaluator&&) noexcept;

    double operator()(double z) const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace mlfit
