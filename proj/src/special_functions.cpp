#include "mlfit/special_functions.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace mlfit {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
// Largest x with Gamma(x) representable in double.
constexpr double kGammaOverflowX = 171.624;

// Lanczos rational approximation, N=13, g=6.024680040776729583740234375.
// Coefficients from the classic double-precision table (max theoretical
// error 1.2e-17); evaluated as num(x)/den(x) where den is the rising
// factorial x(x+1)...(x+11).
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};
constexpr double kLanczosDen[13] = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,  357423.0,    32670.0,
    1925.0,    66.0,       1.0,
};

double lanczos_sum(double x) {
    double num = 0.0;
    double den = 0.0;
    if (x < 30.0) {
        for (int i = 12; i >= 0; --i) {
            num = num * x + kLanczosNum[i];
            den = den * x + kLanczosDen[i];
        }
    } else {
        // Horner in 1/x keeps the polynomials in range for large arguments.
        const double ix = 1.0 / x;
        for (int i = 0; i <= 12; ++i) {
            num = num * ix + kLanczosNum[i];
            den = den * ix + kLanczosDen[i];
        }
    }
    return num / den;
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// sin(pi*x) with argument reduction, exact near integers.
double sinpi(double x) {
    const double r = x - std::round(x);
    const double s = std::sin(kPi * r);
    return static_cast<long long>(std::round(x)) % 2 == 0 ? s : -s;
}

// Gamma for x >= 0.5, no pole/overflow checks.
double gamma_positive(double x) {
    const double zgh = x + kLanczosG - 0.5;
    // Split the power so the intermediate stays in range up to x ~ 171.6.
    const double p = std::pow(zgh, 0.5 * (x - 0.5));
    return lanczos_sum(x) * p * std::exp(-zgh) * p;
}

std::string describe(const char* fn, double x) {
    std::ostringstream os;
    os << fn << ": x = " << x;
    return os.str();
}

// --- quad-precision helpers for the series kernels ------------------------

// 1/Gamma(x) in __float128 for x > 0 (the only case a valid series needs;
// non-positive integers still map to 0 for safety).
__float128 rgamma_q(__float128 x) {
    if (x <= 0.0Q && x == floorq(x)) return 0.0Q;
    return expq(-lgammaq(x));
}

struct KahanQ {
    __float128 sum = 0.0Q;
    __float128 comp = 0.0Q;

    void add(__float128 t) {
        const __float128 y = t - comp;
        const __float128 u = sum + y;
        comp = (u - sum) - y;
        sum = u;
    }
};

void check_series_args(double alpha, double beta, double z,
                       const SeriesPolicy& policy, const char* fn) {
    policy.validate();
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError(std::string(fn) + ": alpha must be positive, got " +
                          std::to_string(alpha));
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError(std::string(fn) + ": beta must be positive, got " +
                          std::to_string(beta));
    }
    if (!std::isfinite(z) || std::fabs(z) > policy.max_abs_arg) {
        std::ostringstream os;
        os << fn << ": |z| = " << std::fabs(z) << " exceeds max_abs_arg = "
           << policy.max_abs_arg;
        throw SeriesGuardError(os.str());
    }
}

double finish_series(__float128 sum, const char* fn) {
    const double result = static_cast<double>(sum);
    if (!std::isfinite(result)) {
        throw OverflowError(std::string(fn) + ": series value exceeds double range");
    }
    return result;
}

[[noreturn]] void throw_nonconvergence(const char* fn, std::size_t max_terms) {
    std::ostringstream os;
    os << fn << ": series not converged after " << max_terms << " terms";
    throw SeriesConvergenceError(os.str());
}

// Shared summation loop.  `coeff(k)` supplies the k-th coefficient
// multiplying z^k; returning a quiet 0 is fine (Gamma poles).
template <typename CoeffFn>
double sum_series(double z, const SeriesPolicy& policy, const char* fn,
                  CoeffFn&& coeff) {
    KahanQ acc;
    __float128 zk = 1.0Q;
    const __float128 zq = z;
    __float128 prev_term = 0.0Q;
    for (std::size_t k = 0; k < policy.max_terms; ++k) {
        const __float128 term = zk * coeff(k);
        if (isinfq(term) || isnanq(term)) {
            throw OverflowError(std::string(fn) + ": series term overflow");
        }
        acc.add(term);
        const __float128 threshold =
            static_cast<__float128>(policy.rel_tol) * fabsq(acc.sum) +
            static_cast<__float128>(policy.abs_tol);
        if (k >= 2 && fabsq(term) < threshold && fabsq(prev_term) < threshold) {
            return finish_series(acc.sum, fn);
        }
        prev_term = term;
        zk *= zq;
    }
    throw_nonconvergence(fn, policy.max_terms);
}

}  // namespace

void SeriesPolicy::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_terms < 1 ||
        !(max_abs_arg > 0.0)) {
        throw DomainError("SeriesPolicy: rel_tol, abs_tol and max_abs_arg must be "
                          "positive and max_terms >= 1");
    }
}

double gamma(double x) {
    if (!std::isfinite(x)) throw DomainError(describe("gamma", x));
    if (is_nonpositive_integer(x)) {
        throw PoleError(describe("gamma: pole at non-positive integer", x));
    }
    if (x > kGammaOverflowX) {
        throw OverflowError(describe("gamma: result exceeds double range", x));
    }
    if (x >= 0.5) return gamma_positive(x);
    // Reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x)).
    const double s = sinpi(x);
    if (1.0 - x > kGammaOverflowX) {
        // Gamma(1-x) overflows, so Gamma(x) underflows.
        return std::copysign(0.0, s);
    }
    return kPi / (s * gamma_positive(1.0 - x));
}

double reciprocal_gamma(double x) {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    if (is_nonpositive_integer(x)) return 0.0;
    if (x >= 0.5) {
        if (x > kGammaOverflowX) return std::exp(-std::lgamma(x));
        return 1.0 / gamma_positive(x);
    }
    // 1/Gamma(x) = sin(pi x)/pi * Gamma(1 - x)
    const double s = sinpi(x);
    if (1.0 - x > kGammaOverflowX) {
        return std::copysign(std::numeric_limits<double>::infinity(), s);
    }
    return s / kPi * gamma_positive(1.0 - x);
}

double pochhammer(double g, unsigned k) {
    double result = 1.0;
    for (unsigned i = 0; i < k; ++i) {
        result *= g + static_cast<double>(i);
    }
    return result;
}

double generalized_pochhammer(double g, double q, unsigned k) {
    if (k == 0) return 1.0;
    const double qk = q * static_cast<double>(k);
    if (qk >= 0.0 && qk == std::floor(qk) && qk < 4.0e9) {
        return pochhammer(g, static_cast<unsigned>(qk));
    }
    const double top = g + qk;
    const bool top_pole = is_nonpositive_integer(top);
    const bool bottom_pole = is_nonpositive_integer(g);
    if (top_pole && !bottom_pole) {
        throw PoleError(describe("generalized_pochhammer: Gamma pole at g + q*k",
                                 top));
    }
    if (bottom_pole && !top_pole) return 0.0;  // Gamma(g) pole dominates
    if (top_pole && bottom_pole) {
        // Residue ratio: lim Gamma(-m2+e)/Gamma(-m1+e) = (-1)^(m1-m2) m1!/m2!.
        const double m1 = -g;
        const double m2 = -top;
        const double value = std::exp(std::lgamma(m1 + 1.0) - std::lgamma(m2 + 1.0));
        const long long diff = static_cast<long long>(m1 - m2);
        return diff % 2 == 0 ? value : -value;
    }
    // General case via log-Gamma differences; track the sign of each Gamma.
    auto log_abs_gamma = [](double x, int& sign) {
        sign = 1;
        if (x < 0.0) {
            const long long fl = static_cast<long long>(std::floor(x));
            sign = fl % 2 == 0 ? 1 : -1;
        }
        return std::lgamma(x);
    };
    int sign_top = 1;
    int sign_bottom = 1;
    const double lt = log_abs_gamma(top, sign_top);
    const double lb = log_abs_gamma(g, sign_bottom);
    return sign_top * sign_bottom * std::exp(lt - lb);
}

// ---------------------------------------------------------------------------

struct MlTwoEvaluator::Impl {
    double alpha;
    double beta;
    SeriesPolicy policy;
    mutable std::vector<__float128> rg;  // rg[k] = 1/Gamma(alpha*k + beta)

    __float128 coeff(std::size_t k) const {
        while (rg.size() <= k) {
            const std::size_t n = rg.size();
            rg.push_back(rgamma_q(static_cast<__float128>(alpha) * n +
                                  static_cast<__float128>(beta)));
        }
        return rg[k];
    }
};

MlTwoEvaluator::MlTwoEvaluator(MLTwoParams params, SeriesPolicy policy)
    : impl_(new Impl{params.alpha, params.beta, policy, {}}) {
    policy.validate();
    if (!(params.alpha > 0.0) || !std::isfinite(params.alpha)) {
        throw DomainError("MlTwoEvaluator: alpha must be positive");
    }
    if (!(params.beta > 0.0) || !std::isfinite(params.beta)) {
        throw DomainError("MlTwoEvaluator: beta must be positive");
    }
}

MlTwoEvaluator::~MlTwoEvaluator() = default;
MlTwoEvaluator::MlTwoEvaluator(MlTwoEvaluator&&) noexcept = default;
MlTwoEvaluator& MlTwoEvaluator::operator=(MlTwoEvaluator&&) noexcept = default;

double MlTwoEvaluator::operator()(double z) const {
    check_series_args(impl_->alpha, impl_->beta, z, impl_->policy, "ml_two");
    return sum_series(z, impl_->policy, "ml_two",
                      [this](std::size_t k) { return impl_->coeff(k); });
}

double ml_one(double alpha, double z, const SeriesPolicy& policy) {
    return ml_two({alpha, 1.0}, z, policy);
}

double ml_two(const MLTwoParams& p, double z, const SeriesPolicy& policy) {
    const MlTwoEvaluator eval(p, policy);
    return eval(z);
}

double ml_prabhakar(const PrabhakarParams& p, double z,
                    const SeriesPolicy& policy) {
    check_series_args(p.alpha, p.beta, z, policy, "ml_prabhakar");
    if (p.gamma == 0.0 || !std::isfinite(p.gamma)) {
        throw DomainError("ml_prabhakar: gamma must be a nonzero real");
    }
    const __float128 alpha = p.alpha;
    const __float128 beta = p.beta;
    const __float128 g = p.gamma;
    // c_k = (gamma)_k / k!, by the recurrence c_{k+1} = c_k (gamma+k)/(k+1).
    __float128 c = 1.0Q;
    std::size_t next = 0;
    return sum_series(z, policy, "ml_prabhakar", [&](std::size_t k) {
        while (next < k) {
            c = c * (g + static_cast<__float128>(next)) /
                static_cast<__float128>(next + 1);
            ++next;
        }
        return c * rgamma_q(alpha * k + beta);
    });
}

double ml_shukla(const ShuklaParams& p, double z, const SeriesPolicy& policy) {
    check_series_args(p.alpha, p.beta, z, policy, "ml_shukla");
    if (!(p.gamma > 0.0) || !std::isfinite(p.gamma)) {
        throw DomainError("ml_shukla: gamma must be positive");
    }
    const bool q_integer = p.q == std::floor(p.q);
    if (!((p.q > 0.0 && p.q < 1.0) || (q_integer && p.q >= 1.0)) ||
        !std::isfinite(p.q)) {
        throw DomainError("ml_shukla: q must lie in (0,1) or be a positive integer");
    }
    if (p.q == 1.0) {
        // (gamma)_{1*k} = (gamma)_k: identical to the Prabhakar series.
        return ml_prabhakar({p.alpha, p.beta, p.gamma}, z, policy);
    }
    const __float128 alpha = p.alpha;
    const __float128 beta = p.beta;
    const __float128 g = p.gamma;
    const __float128 q = p.q;
    const __float128 lg_g = lgammaq(g);
    // (gamma)_{qk}/k! computed in log space; gamma > 0 and q > 0 keep every
    // Gamma argument positive, so no sign tracking is needed.
    return sum_series(z, policy, "ml_shukla", [&](std::size_t k) {
        const __float128 lg_top = lgammaq(g + q * static_cast<__float128>(k));
        const __float128 lg_fact = lgammaq(static_cast<__float128>(k) + 1.0Q);
        return expq(lg_top - lg_g - lg_fact) * rgamma_q(alpha * k + beta);
    });
}

}  // namespace mlfit
