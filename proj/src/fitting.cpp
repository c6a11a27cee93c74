#include "mlfit/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace mlfit {

namespace {

constexpr double kPenaltyBase = 1e10;

std::vector<XY> to_xy(std::span<const AveragedPoint> points,
                      bool rounded = false) {
    std::vector<XY> xy;
    xy.reserve(points.size());
    for (const AveragedPoint& p : points) {
        if (rounded) {
            xy.push_back({std::round(p.mean_unemployment * 1000.0) / 1000.0,
                          std::round(p.mean_inflation * 1000.0) / 1000.0});
        } else {
            xy.push_back({p.mean_unemployment, p.mean_inflation});
        }
    }
    return xy;
}

std::vector<XY> to_xy(const DataSet& data) {
    std::vector<XY> xy;
    xy.reserve(data.records.size());
    for (const EconRecord& r : data.records) {
        xy.push_back({r.unemployment, r.inflation});
    }
    return xy;
}

struct LineFit {
    double slope;
    double intercept;
};

// Ordinary least squares for y = intercept + slope * x.
LineFit ols(std::span<const double> xs, std::span<const double> ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return {0.0, sy / n};
    return {(n * sxy - sx * sy) / denom, (sy * sxx - sx * sxy) / denom};
}

// Distance from the parameter vector to the feasible region, for the
// penalty wrapper.
double infeasibility(ModelKind kind, std::span<const double> p) {
    if (kind != ModelKind::mittag_leffler) return 0.0;
    const double da = std::max(0.0, -p[0]);
    const double db = std::max(0.0, -p[1]);
    return std::hypot(da, db);
}

bool params_valid(ModelKind kind, std::span<const double> p) {
    for (double v : p) {
        if (!std::isfinite(v)) return false;
    }
    if (kind == ModelKind::mittag_leffler) return p[0] > 0.0 && p[1] > 0.0;
    return true;
}

// Total objective: SSE with invalid parameters and evaluator failures mapped
// to large-but-finite penalties, so the simplex can roam freely.
Objective make_objective(ModelKind kind, std::vector<XY> points,
                         const SeriesPolicy& policy) {
    return [kind, points = std::move(points),
            policy](std::span<const double> p) -> double {
        if (!params_valid(kind, p)) {
            return kPenaltyBase + infeasibility(kind, p);
        }
        try {
            return sse(make_evaluator(kind, p, policy), points);
        } catch (const Error&) {
            return kPenaltyBase;
        }
    };
}

}  // namespace

StartGrid default_starts(ModelKind kind, std::span<const XY> points) {
    if (points.size() < 3) {
        throw DegenerateDataError("default_starts: need at least 3 points, got " +
                                  std::to_string(points.size()));
    }
    double y_max = points[0].y;
    double y_sum = 0.0;
    for (const XY& p : points) {
        y_max = std::max(y_max, p.y);
        y_sum += p.y;
    }
    const double y_mean = y_sum / static_cast<double>(points.size());

    std::vector<double> lx, ly, px, ply;  // log-log and x-log samples, y > 0
    for (const XY& p : points) {
        if (p.y > 0.0 && p.x > 0.0) {
            lx.push_back(std::log(p.x));
            ly.push_back(std::log(p.y));
            px.push_back(p.x);
            ply.push_back(std::log(p.y));
        }
    }
    const bool can_log = lx.size() >= 2;

    StartGrid grid;
    switch (kind) {
        case ModelKind::power: {
            if (can_log) {
                const LineFit f = ols(lx, ly);  // log y = log b + c log x
                grid.starts.push_back({0.0, std::exp(f.intercept), f.slope});
            }
            grid.starts.push_back({1.0 - y_mean, 1.0, 0.0});  // constant at mean
            break;
        }
        case ModelKind::exponential: {
            if (can_log) {
                const LineFit f = ols(px, ply);  // log y = log b + c x
                grid.starts.push_back({0.0, std::exp(f.intercept), f.slope});
            }
            grid.starts.push_back({0.0, y_max, -0.5});
            grid.starts.push_back({1.0 - y_mean, 1.0, 0.0});
            break;
        }
        case ModelKind::mittag_leffler: {
            for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
                for (double beta : {1.0, 1.5, 2.0}) {
                    grid.starts.push_back({alpha, beta, -0.3, y_max});
                }
            }
            break;
        }
    }
    return grid;
}

StartGrid default_starts(ModelKind kind, std::span<const AveragedPoint> points) {
    return default_starts(kind, to_xy(points));
}

FitReport fit_model(ModelKind kind, const DataSet& data,
                    const SimplexConfig& config, const SeriesPolicy& policy,
                    bool use_rounded_averages) {
    validate(data);
    const std::vector<AveragedPoint> binned = bin_average(data);
    const std::vector<XY> avg = to_xy(binned, use_rounded_averages);
    const std::vector<XY> orig = to_xy(data);

    const StartGrid grid = default_starts(kind, avg);
    const Objective objective = make_objective(kind, avg, policy);
    OptimResult optim = multi_start(objective, grid.starts, config);

    FitReport report;
    report.model_kind = kind;
    report.params = optim.best_params;
    report.dataset_label = data.label;
    report.sse_average = sse(make_evaluator(kind, report.params, policy), avg);
    report.sse_original = sse(make_evaluator(kind, report.params, policy), orig);
    report.optim = std::move(optim);
    return report;
}

std::pair<double, double> evaluate_published(ModelKind kind,
                                             std::span<const double> params,
                                             const DataSet& data,
                                             const SeriesPolicy& policy,
                                             bool use_rounded_averages) {
    validate(data);
    const std::vector<XY> avg = to_xy(bin_average(data), use_rounded_averages);
    const std::vector<XY> orig = to_xy(data);
    return {sse(make_evaluator(kind, params, policy), avg),
            sse(make_evaluator(kind, params, policy), orig)};
}

std::span<const PublishedFit> published_fits() {
    static const std::array<PublishedFit, 6> table{{
        {ModelKind::mittag_leffler, "france",
         {1.5317, 1.9470, -0.3209, 13.9419}, 1.1843, 189.1845},
        {ModelKind::exponential, "france",
         {-0.1507, 220.3057, -0.4449}, 1.5780, 195.9090},
        {ModelKind::power, "france",
         {1.7578, 1933.2, -2.6297}, 1.7704, 198.3482},
        {ModelKind::mittag_leffler, "germany",
         {1.382, 1.7055, -0.3167, 4.6929}, 6.0313, 45.6200},
        {ModelKind::exponential, "germany",
         {0.0381, 12.1022, -0.2007}, 7.0219, 48.1316},
        {ModelKind::power, "germany",
         {32.1245, 43.8469, -0.1141}, 7.3879, 49.7545},
    }};
    return table;
}

const PublishedFit& published_fit(ModelKind kind, std::string_view country) {
    for (const PublishedFit& f : published_fits()) {
        if (f.kind == kind && country == f.country) return f;
    }
    throw DomainError("published_fit: no reference entry for " +
                      std::string(model_name(kind)) + "/" + std::string(country));
}

bool ReproReport::all_pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const ReproCell& c) {
        return c.fitted_pass && c.published_pass;
    });
}

ReproReport reproduce_tables(const SimplexConfig& config,
                             const SeriesPolicy& policy,
                             bool use_rounded_averages,
                             const std::map<std::string, DataSet>* datasets) {
    const std::map<std::string, DataSet>& sets =
        datasets != nullptr ? *datasets : embedded_datasets();
    constexpr std::array<ModelKind, 3> kinds{
        ModelKind::mittag_leffler, ModelKind::exponential, ModelKind::power};

    ReproReport report;
    for (const char* country : {"france", "germany"}) {
        const auto it = sets.find(country);
        for (ModelKind kind : kinds) {
            const PublishedFit& ref = published_fit(kind, country);
            ReproCell cell;
            cell.country = country;
            cell.kind = kind;
            cell.paper_sse_average = ref.sse_average;
            cell.paper_sse_original = ref.sse_original;

            if (it == sets.end()) {
                cell.fitted_error = "dataset missing";
                cell.published_error = "dataset missing";
                report.cells.push_back(std::move(cell));
                continue;
            }
            try {
                cell.fitted = fit_model(kind, it->second, config, policy,
                                        use_rounded_averages);
                cell.fitted_pass =
                    cell.fitted->sse_average <= kFitRatioLimit * ref.sse_average;
            } catch (const Error& e) {
                cell.fitted_error = e.what();
            }
            try {
                cell.published_eval = evaluate_published(
                    kind, ref.params, it->second, policy, use_rounded_averages);
                const auto [avg, orig] = *cell.published_eval;
                cell.published_pass =
                    std::fabs(avg - ref.sse_average) <=
                        kPublishedRelTol * ref.sse_average &&
                    std::fabs(orig - ref.sse_original) <=
                        kPublishedRelTol * ref.sse_original;
            } catch (const Error& e) {
                cell.published_error = e.what();
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

// --- demos -------------------------------------------------------------------

std::string_view demo_target_name(DemoTarget t) {
    switch (t) {
        case DemoTarget::sine: return "sine";
        case DemoTarget::damped_cos: return "damped-cos";
        case DemoTarget::exp_erfc: return "exp-erfc";
    }
    return "?";
}

double demo_target_value(DemoTarget t, double x, double alpha, double beta) {
    switch (t) {
        case DemoTarget::sine:
            return std::sin(x);
        case DemoTarget::damped_cos:
            return std::exp(-alpha * x) * std::cos(beta * x);
        case DemoTarget::exp_erfc:
            if (x < 0.0) {
                throw DomainError("demo_target_value: exp_erfc needs x >= 0");
            }
            return std::exp(x) * std::erfc(std::sqrt(x));
    }
    throw DomainError("demo_target_value: unknown target");
}

DemoSpec default_demo_spec(DemoTarget t) {
    switch (t) {
        case DemoTarget::sine: return {t, 0.0, 2.0 * std::numbers::pi, 30, 0.3, 2.0};
        case DemoTarget::damped_cos: return {t, 0.0, 10.0, 30, 0.3, 2.0};
        case DemoTarget::exp_erfc: return {t, 0.1, 5.0, 30, 0.3, 2.0};
    }
    throw DomainError("default_demo_spec: unknown target");
}

SeriesPolicy demo_series_policy() {
    SeriesPolicy policy;
    policy.max_abs_arg = 2000.0;
    return policy;
}

FitReport synthetic_demo(const DemoSpec& spec, const SimplexConfig& config,
                         const SeriesPolicy& policy) {
    if (spec.n_points < 8) {
        throw DomainError("synthetic_demo: need n_points >= 8");
    }
    if (!(spec.x_hi > spec.x_lo)) {
        throw DomainError("synthetic_demo: empty x range");
    }
    std::vector<XY> samples;
    samples.reserve(spec.n_points);
    const double step = (spec.x_hi - spec.x_lo) /
                        static_cast<double>(spec.n_points - 1);
    for (std::size_t i = 0; i < spec.n_points; ++i) {
        const double x = spec.x_lo + step * static_cast<double>(i);
        samples.push_back(
            {x, demo_target_value(spec.target, x, spec.alpha, spec.beta)});
    }
    // The model needs x > 0; nudge a zero left endpoint off the axis.
    if (samples.front().x == 0.0) samples.front().x = 1e-9;

    const StartGrid grid = default_starts(ModelKind::mittag_leffler, samples);
    const Objective objective =
        make_objective(ModelKind::mittag_leffler, samples, policy);
    OptimResult optim = multi_start(objective, grid.starts, config);

    FitReport report;
    report.model_kind = ModelKind::mittag_leffler;
    report.params = optim.best_params;
    report.dataset_label = std::string(demo_target_name(spec.target));
    report.sse_average =
        sse(make_evaluator(ModelKind::mittag_leffler, report.params, policy),
            samples);
    report.sse_original = report.sse_average;  // no separate original set
    report.optim = std::move(optim);
    return report;
}

}  // namespace mlfit
