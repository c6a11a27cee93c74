#pragma once

// The three competing regression models (power, exponential, Mittag-Leffler),
// the original Phillips power-law with its fixed constants, and the shared
// SSE objective.

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "mlfit/special_functions.hpp"

namespace mlfit {

enum class ModelKind { mittag_leffler, exponential, power };

// y(x) = b * x^c - a, x > 0
struct PowerParams {
    double a;
    double b;
    double c;
};

// y(x) = b * e^(c x) - a
struct ExpParams {
    double a;
    double b;
    double c;
};

// y(x) = C * x^(beta-1) * E_{alpha,beta}(a * x^alpha), x > 0
struct MLModelParams {
    double alpha;
    double beta;
    double a;
    double C;
};

// y + a = b * x^c with the 1958 constants as defaults.
struct PhillipsOriginalParams {
    double a = 0.900;
    double b = 9.638;
    double c = -1.394;
};

double eval_power(const PowerParams& p, double x);
double eval_exponential(const ExpParams& p, double x);
double eval_ml_model(const MLModelParams& p, double x,
                     const SeriesPolicy& policy = {});
double eval_phillips_original(const PhillipsOriginalParams& p, double x);

struct XY {
    double x;
    double y;
};

// Sum of squared vertical offsets between the points and model(x).
// 0 for an empty list.  The squared residuals are sorted before summing so
// the result is independent of the point order.
double sse(const std::function<double(double)>& model,
           std::span<const XY> points);

// Canonical parameter-vector layout: (a, b, c) for power/exponential,
// (alpha, beta, a, C) for the Mittag-Leffler model.
std::size_t param_count(ModelKind kind);
std::string_view model_name(ModelKind kind);        // "mittag_leffler", ...
std::span<const std::string_view> param_names(ModelKind kind);

// Bundles a parameter vector into a single-argument evaluator.  For the
// Mittag-Leffler kind the evaluator shares one coefficient cache across
// calls, which matters inside SSE loops.  Throws DomainError on a wrong
// vector length.
std::function<double(double)> make_evaluator(ModelKind kind,
                                             std::span<const double> params,
                                             const SeriesPolicy& policy = {});

}  // namespace mlfit
