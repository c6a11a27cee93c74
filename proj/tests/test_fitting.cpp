#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mlfit/fitting.hpp"

using namespace mlfit;

namespace {

std::vector<XY> to_points(const std::vector<AveragedPoint>& bins) {
    std::vector<XY> pts;
    for (const AveragedPoint& b : bins) {
        pts.push_back({b.mean_unemployment, b.mean_inflation});
    }
    return pts;
}

DataSet constant_dataset(double y) {
    DataSet d;
    d.label = "constant";
    for (int i = 0; i < 12; ++i) {
        d.records.push_back({2000 + i, 4.0 + 0.65 * i, y});
    }
    return d;
}

}  // namespace

TEST_CASE("default_starts shapes") {
    const auto& sets = embedded_datasets();
    const auto de = to_points(bin_average(sets.at("germany")));
    const auto fr = to_points(bin_average(sets.at("france")));

    CHECK(default_starts(ModelKind::mittag_leffler, de).starts.size() == 12);

    // exponential grid carries the (a=0, b=max y, c=-0.5) seed
    bool has_maxy_seed = false;
    for (const auto& s : default_starts(ModelKind::exponential, fr).starts) {
        if (s[0] == 0.0 && std::fabs(s[1] - 13.060) < 1e-12 && s[2] == -0.5) {
            has_maxy_seed = true;
        }
    }
    CHECK(has_maxy_seed);

    // ML starts: C = max y, a = -0.3
    for (const auto& s : default_starts(ModelKind::mittag_leffler, fr).starts) {
        CHECK(s[2] == -0.3);
        CHECK(s[3] == 13.060);
    }

    // all-nonpositive y: log-regression seeds are skipped
    std::vector<XY> flat;
    for (int i = 1; i <= 6; ++i) flat.push_back({double(i), -1.0 - i});
    CHECK(default_starts(ModelKind::power, flat).starts.size() == 1);
    CHECK(default_starts(ModelKind::exponential, flat).starts.size() == 2);
    for (const auto& kind : {ModelKind::power, ModelKind::exponential,
                             ModelKind::mittag_leffler}) {
        CHECK_FALSE(default_starts(kind, flat).starts.empty());
    }

    // degenerate input
    std::vector<XY> two{{1.0, 1.0}, {2.0, 2.0}};
    CHECK_THROWS_AS(default_starts(ModelKind::power, two), DegenerateDataError);
}

TEST_CASE("fit_model nails a constant dataset with the exponential model") {
    const DataSet d = constant_dataset(2.5);
    const FitReport r = fit_model(ModelKind::exponential, d);
    CHECK(r.optim.converged);
    CHECK(r.sse_average <= 1e-10);
    const auto f = make_evaluator(ModelKind::exponential, r.params);
    for (double x = 4.0; x <= 11.0; x += 0.5) {
        CHECK(std::fabs(f(x) - 2.5) <= 1e-5);
    }
}

TEST_CASE("fit_model on France reproduces the reference Mittag-Leffler fit") {
    const DataSet& fr = embedded_datasets().at("france");
    const FitReport r = fit_model(ModelKind::mittag_leffler, fr);
    CHECK(r.optim.converged);
    CHECK(r.dataset_label == "france");
    CHECK(r.sse_average <= 1.2080);
    CHECK(r.sse_original >= 185.0);
    CHECK(r.sse_original <= 195.0);

    // report self-consistency: stored errors reproduce from stored params
    const auto avg = to_points(bin_average(fr));
    const double again =
        sse(make_evaluator(ModelKind::mittag_leffler, r.params), avg);
    CHECK(std::fabs(again - r.sse_average) <= 1e-12);
    CHECK(r.optim.best_value == doctest::Approx(r.sse_average).epsilon(1e-12));

    // the optimum cannot be worse than any start of its own grid
    for (const auto& start :
         default_starts(ModelKind::mittag_leffler, avg).starts) {
        const double at_start =
            sse(make_evaluator(ModelKind::mittag_leffler, start), avg);
        CHECK(r.sse_average <= at_start + 1e-12);
    }

    // original-set error really is the 32-record SSE
    std::vector<XY> orig;
    for (const EconRecord& rec : fr.records) {
        orig.push_back({rec.unemployment, rec.inflation});
    }
    CHECK(orig.size() == 32);
    CHECK(std::fabs(sse(make_evaluator(ModelKind::mittag_leffler, r.params),
                        orig) -
                    r.sse_original) <= 1e-12);
}

TEST_CASE("evaluate_published matches the reference errors") {
    const auto& sets = embedded_datasets();

    const auto [fr_ml_avg, fr_ml_orig] = evaluate_published(
        ModelKind::mittag_leffler,
        published_fit(ModelKind::mittag_leffler, "france").params,
        sets.at("france"));
    CHECK(std::fabs(fr_ml_avg - 1.1843) <= 0.02 * 1.1843);
    CHECK(std::fabs(fr_ml_orig - 189.1845) <= 0.02 * 189.1845);

    const auto [de_exp_avg, de_exp_orig] = evaluate_published(
        ModelKind::exponential,
        published_fit(ModelKind::exponential, "germany").params,
        sets.at("germany"));
    CHECK(std::fabs(de_exp_avg - 7.0219) <= 0.02 * 7.0219);
    CHECK(std::fabs(de_exp_orig - 48.1316) <= 0.02 * 48.1316);

    const auto [fr_pw_avg, fr_pw_orig] = evaluate_published(
        ModelKind::power, published_fit(ModelKind::power, "france").params,
        sets.at("france"));
    CHECK(std::fabs(fr_pw_avg - 1.7704) <= 0.02 * 1.7704);
    CHECK(std::fabs(fr_pw_orig - 198.3482) <= 0.02 * 198.3482);

    // The germany/ML reference row is internally inconsistent: its printed
    // parameters evaluate to other error values.  Pin what the parameters
    // actually produce (cross-checked with two independent evaluations).
    const auto [de_ml_avg, de_ml_orig] = evaluate_published(
        ModelKind::mittag_leffler,
        published_fit(ModelKind::mittag_leffler, "germany").params,
        sets.at("germany"));
    CHECK(std::fabs(de_ml_avg - 7.2823) <= 0.005 * 7.2823);
    CHECK(std::fabs(de_ml_orig - 44.1631) <= 0.005 * 44.1631);
}

TEST_CASE("published_fits table") {
    CHECK(published_fits().size() == 6);
    const PublishedFit& f = published_fit(ModelKind::mittag_leffler, "france");
    CHECK(f.sse_average == 1.1843);
    CHECK(f.params.size() == 4);
    CHECK_THROWS_AS(published_fit(ModelKind::power, "spain"), DomainError);
}

TEST_CASE("rounded-averages switch") {
    const DataSet& fr = embedded_datasets().at("france");
    const auto& params = published_fit(ModelKind::mittag_leffler, "france").params;
    const auto [full, full_orig] = evaluate_published(
        ModelKind::mittag_leffler, params, fr, SeriesPolicy{}, false);
    const auto [rounded, rounded_orig] = evaluate_published(
        ModelKind::mittag_leffler, params, fr, SeriesPolicy{}, true);
    CHECK(full != rounded);
    CHECK(std::fabs(full - rounded) < 0.01);
    CHECK(rounded_orig == full_orig);  // the original set is never rounded
    CHECK(std::fabs(rounded - 1.1843) <= 0.02 * 1.1843);
}

TEST_CASE("reproduce_tables structure") {
    SimplexConfig fast;
    fast.max_iter = 300;
    fast.restarts = 0;
    const ReproReport report = reproduce_tables(fast);
    REQUIRE(report.cells.size() == 6);
    int fitted = 0, published = 0;
    for (const ReproCell& c : report.cells) {
        CHECK((c.country == "france" || c.country == "germany"));
        CHECK(c.paper_sse_average > 0.0);
        fitted += c.fitted.has_value();
        published += c.published_eval.has_value();
    }
    CHECK(fitted == 6);
    CHECK(published == 6);
    // missing dataset is captured per cell, not thrown
    std::map<std::string, DataSet> only_france{
        {"france", embedded_datasets().at("france")}};
    const ReproReport partial = reproduce_tables(fast, SeriesPolicy{}, false,
                                                 &only_france);
    int errors = 0;
    for (const ReproCell& c : partial.cells) {
        errors += !c.fitted_error.empty();
    }
    CHECK(errors == 3);
    CHECK_FALSE(partial.all_pass());
}

TEST_CASE("synthetic_demo: sine") {
    const FitReport r = synthetic_demo(default_demo_spec(DemoTarget::sine));
    CHECK(r.optim.converged);
    CHECK(r.dataset_label == "sine");
    double ssq = 0.0;
    const DemoSpec spec = default_demo_spec(DemoTarget::sine);
    for (std::size_t i = 0; i < spec.n_points; ++i) {
        const double x = spec.x_lo + (spec.x_hi - spec.x_lo) * i / (spec.n_points - 1);
        const double y = demo_target_value(DemoTarget::sine, x);
        ssq += y * y;
    }
    CHECK(r.sse_average <= 0.05 * ssq);
}

TEST_CASE("synthetic_demo: exp-erfc fit is monotone decreasing") {
    const FitReport r = synthetic_demo(default_demo_spec(DemoTarget::exp_erfc));
    CHECK(r.optim.converged);
    const auto f = make_evaluator(ModelKind::mittag_leffler, r.params,
                                  demo_series_policy());
    double prev = f(0.1);
    for (double x = 0.2; x <= 5.0; x += 0.1) {
        const double y = f(x);
        CHECK(y <= prev + 1e-9);
        prev = y;
    }
}

TEST_CASE("synthetic_demo argument checks") {
    DemoSpec bad = default_demo_spec(DemoTarget::sine);
    bad.n_points = 7;
    CHECK_THROWS_AS(synthetic_demo(bad), DomainError);
    bad = default_demo_spec(DemoTarget::sine);
    bad.x_hi = bad.x_lo;
    CHECK_THROWS_AS(synthetic_demo(bad), DomainError);
    CHECK_THROWS_AS(demo_target_value(DemoTarget::exp_erfc, -1.0), DomainError);
}
