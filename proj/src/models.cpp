#include "mlfit/models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <string>

namespace mlfit {

namespace {

void require_positive_x(double x, const char* fn) {
    if (!(x > 0.0)) {
        throw DomainError(std::string(fn) + ": x must be positive, got " +
                          std::to_string(x));
    }
}

}  // namespace

double eval_power(const PowerParams& p, double x) {
    require_positive_x(x, "eval_power");
    return p.b * std::pow(x, p.c) - p.a;
}

double eval_exponential(const ExpParams& p, double x) {
    const double cx = p.c * x;
    if (cx > 700.0) {
        throw OverflowError("eval_exponential: c*x = " + std::to_string(cx) +
                            " overflows exp");
    }
    return p.b * std::exp(cx) - p.a;
}

double eval_ml_model(const MLModelParams& p, double x,
                     const SeriesPolicy& policy) {
    require_positive_x(x, "eval_ml_model");
    if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
        throw DomainError("eval_ml_model: alpha and beta must be positive");
    }
    const double z = p.a * std::pow(x, p.alpha);
    return p.C * std::pow(x, p.beta - 1.0) * ml_two({p.alpha, p.beta}, z, policy);
}

double eval_phillips_original(const PhillipsOriginalParams& p, double x) {
    require_positive_x(x, "eval_phillips_original");
    return p.b * std::pow(x, p.c) - p.a;
}

double sse(const std::function<double(double)>& model,
           std::span<const XY> points) {
    std::vector<double> squares;
    squares.reserve(points.size());
    for (const XY& p : points) {
        const double r = p.y - model(p.x);
        squares.push_back(r * r);
    }
    // Sorted accumulation: permutation-independent and adds small terms first.
    std::sort(squares.begin(), squares.end());
    double total = 0.0;
    for (double s : squares) total += s;
    return total;
}

std::size_t param_count(ModelKind kind) {
    return kind == ModelKind::mittag_leffler ? 4 : 3;
}

std::string_view model_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::mittag_leffler: return "mittag_leffler";
        case ModelKind::exponential: return "exponential";
        case ModelKind::power: return "power";
    }
    return "?";
}

std::span<const std::string_view> param_names(ModelKind kind) {
    static constexpr std::array<std::string_view, 4> ml{"alpha", "beta", "a", "C"};
    static constexpr std::array<std::string_view, 3> abc{"a", "b", "c"};
    if (kind == ModelKind::mittag_leffler) return {ml.data(), ml.size()};
    return {abc.data(), abc.size()};
}

std::function<double(double)> make_evaluator(ModelKind kind,
                                             std::span<const double> params,
                                             const SeriesPolicy& policy) {
    if (params.size() != param_count(kind)) {
        throw DomainError("make_evaluator: expected " +
                          std::to_string(param_count(kind)) + " parameters for " +
                          std::string(model_name(kind)) + ", got " +
                          std::to_string(params.size()));
    }
    switch (kind) {
        case ModelKind::power: {
            const PowerParams p{params[0], params[1], params[2]};
            return [p](double x) { return eval_power(p, x); };
        }
        case ModelKind::exponential: {
            const ExpParams p{params[0], params[1], params[2]};
            return [p](double x) { return eval_exponential(p, x); };
        }
        case ModelKind::mittag_leffler: {
            const MLModelParams p{params[0], params[1], params[2], params[3]};
            if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
                throw DomainError("make_evaluator: alpha and beta must be positive");
            }
            auto series = std::make_shared<MlTwoEvaluator>(
                MLTwoParams{p.alpha, p.beta}, policy);
            return [p, series](double x) {
                require_positive_x(x, "eval_ml_model");
                const double z = p.a * std::pow(x, p.alpha);
                return p.C * std::pow(x, p.beta - 1.0) * (*series)(z);
            };
        }
    }
    throw DomainError("make_evaluator: unknown model kind");
}

}  // namespace mlfit
