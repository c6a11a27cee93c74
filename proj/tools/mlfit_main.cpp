// mlfit command-line front end: dataset ingestion, model fitting, reference
// reproduction, Mittag-Leffler evaluation, and plot-data emission.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mlfit/dataio.hpp"
#include "mlfit/fitting.hpp"
#include "mlfit/models.hpp"
#include "mlfit/optimizer.hpp"
#include "mlfit/special_functions.hpp"

namespace {

using nlohmann::json;
using namespace mlfit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNoConverge = 4;
constexpr int kExitRepro = 5;
constexpr int kExitNumeric = 6;

std::string fmt(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// Shortest representation that still round-trips.
std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back = 0.0;
    if (std::sscanf(buf, "%lf", &back) == 1 && back == v) {
        for (int p = 15; p <= 16; ++p) {
            char shorter[64];
            std::snprintf(shorter, sizeof shorter, "%.*g", p, v);
            if (std::sscanf(shorter, "%lf", &back) == 1 && back == v) {
                return shorter;
            }
        }
    }
    return buf;
}

std::string fmt_level(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

ModelKind kind_from_flag(const std::string& s) {
    if (s == "ml") return ModelKind::mittag_leffler;
    if (s == "exp") return ModelKind::exponential;
    return ModelKind::power;
}

std::string short_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::mittag_leffler: return "ml";
        case ModelKind::exponential: return "exp";
        case ModelKind::power: return "power";
    }
    return "?";
}

struct DataOpts {
    std::string path;
    std::string country;
};

void add_data_flags(CLI::App* cmd, DataOpts& opts) {
    auto* data = cmd->add_option("--data", opts.path, "CSV file with header "
                                 "year,unemployment_rate,inflation_rate");
    auto* country = cmd->add_option("--country", opts.country,
                                    "built-in dataset")
                        ->check(CLI::IsMember({"france", "germany"}));
    data->excludes(country);
    country->excludes(data);
}

DataSet resolve_dataset(const DataOpts& opts) {
    if (!opts.country.empty()) {
        return embedded_datasets().at(opts.country);
    }
    if (!opts.path.empty()) {
        return load_dataset(opts.path);
    }
    throw CLI::RequiredError("--data or --country");
}

struct OptimOpts {
    double tol = 1e-8;
    std::size_t max_iter = 2000;
    std::size_t restarts = 2;
    bool rounded = false;
};

void add_optim_flags(CLI::App* cmd, OptimOpts& opts, bool with_rounded = true) {
    cmd->add_option("--tol", opts.tol, "simplex x/f tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", opts.max_iter, "iterations per simplex run");
    cmd->add_option("--restarts", opts.restarts, "restarts from the incumbent best");
    if (with_rounded) {
        cmd->add_flag("--rounded-averages", opts.rounded,
                      "fit against 3-decimal rounded bin means");
    }
}

SimplexConfig to_config(const OptimOpts& opts) {
    SimplexConfig config;
    config.x_tol = opts.tol;
    config.f_tol = opts.tol;
    config.max_iter = opts.max_iter;
    config.restarts = opts.restarts;
    return config;
}

json report_to_json(const FitReport& r) {
    json params = json::object();
    const auto names = param_names(r.model_kind);
    for (std::size_t i = 0; i < names.size(); ++i) {
        params[std::string(names[i])] = r.params[i];
    }
    return json{{"model", short_name(r.model_kind)},
                {"dataset", r.dataset_label},
                {"params", params},
                {"sse_average", r.sse_average},
                {"sse_original", r.sse_original},
                {"converged", r.optim.converged},
                {"iterations", r.optim.iterations},
                {"start_index", r.optim.start_index}};
}

void print_report_table(const FitReport& r) {
    std::cout << "dataset: " << r.dataset_label << "\n"
              << "model: " << model_name(r.model_kind) << "\n";
    const auto names = param_names(r.model_kind);
    std::cout << "params:";
    for (std::size_t i = 0; i < names.size(); ++i) {
        std::cout << " " << names[i] << "=" << fmt(r.params[i], 4);
    }
    std::cout << "\nsse_average: " << fmt(r.sse_average, 4)
              << "\nsse_original: " << fmt(r.sse_original, 4)
              << "\nconverged: " << (r.optim.converged ? "yes" : "no")
              << " (iterations " << r.optim.iterations << ", start "
              << r.optim.start_index << ")\n";
}

void print_reports_csv(const std::vector<FitReport>& reports) {
    std::cout << "dataset,model,a,b,c,alpha,beta,C,sse_average,sse_original,"
                 "converged,iterations\n";
    for (const FitReport& r : reports) {
        std::string a, b, c, alpha, beta, C;
        if (r.model_kind == ModelKind::mittag_leffler) {
            alpha = fmt_full(r.params[0]);
            beta = fmt_full(r.params[1]);
            a = fmt_full(r.params[2]);
            C = fmt_full(r.params[3]);
        } else {
            a = fmt_full(r.params[0]);
            b = fmt_full(r.params[1]);
            c = fmt_full(r.params[2]);
        }
        std::cout << r.dataset_label << "," << short_name(r.model_kind) << ","
                  << a << "," << b << "," << c << "," << alpha << "," << beta
                  << "," << C << "," << fmt_full(r.sse_average) << ","
                  << fmt_full(r.sse_original) << ","
                  << (r.optim.converged ? "true" : "false") << ","
                  << r.optim.iterations << "\n";
    }
}

void write_curve(const std::string& path, const std::function<double(double)>& f,
                 double lo, double hi, std::size_t samples) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write curve file '" + path + "'");
    out << "x,y\n";
    const double step = samples > 1 ? (hi - lo) / static_cast<double>(samples - 1)
                                    : 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = lo + step * static_cast<double>(i);
        out << fmt_full(x) << "," << fmt_full(f(x)) << "\n";
    }
}

std::string curve_path_for(const std::string& base, const std::string& model,
                           bool many) {
    if (!many) return base;
    const std::size_t dot = base.rfind('.');
    if (dot == std::string::npos || dot == 0) return base + "." + model;
    return base.substr(0, dot) + "." + model + base.substr(dot);
}

// ---------------------------------------------------------------------------

int cmd_fit(const DataOpts& data_opts, const std::string& model_flag,
            const std::string& format, const OptimOpts& optim,
            const std::string& emit_curve, std::size_t samples) {
    const DataSet data = resolve_dataset(data_opts);
    const SimplexConfig config = to_config(optim);
    const SeriesPolicy policy;

    std::vector<ModelKind> kinds;
    if (model_flag == "all") {
        kinds = {ModelKind::mittag_leffler, ModelKind::exponential,
                 ModelKind::power};
    } else {
        kinds = {kind_from_flag(model_flag)};
    }

    std::vector<FitReport> reports;
    for (ModelKind kind : kinds) {
        reports.push_back(fit_model(kind, data, config, policy, optim.rounded));
    }

    if (!emit_curve.empty()) {
        double lo = data.records.front().unemployment;
        double hi = lo;
        for (const EconRecord& r : data.records) {
            lo = std::min(lo, r.unemployment);
            hi = std::max(hi, r.unemployment);
        }
        lo -= 0.5;
        hi += 0.5;
        if (lo <= 0.0) lo = 1e-6;  // power/ML models need x > 0
        for (const FitReport& r : reports) {
            write_curve(curve_path_for(emit_curve, short_name(r.model_kind),
                                       reports.size() > 1),
                        make_evaluator(r.model_kind, r.params, policy), lo, hi,
                        samples);
        }
    }

    if (format == "json") {
        if (reports.size() == 1) {
            std::cout << report_to_json(reports[0]).dump(2) << "\n";
        } else {
            json arr = json::array();
            for (const FitReport& r : reports) arr.push_back(report_to_json(r));
            std::cout << arr.dump(2) << "\n";
        }
    } else if (format == "csv") {
        print_reports_csv(reports);
    } else {
        bool first = true;
        for (const FitReport& r : reports) {
            if (!first) std::cout << "\n";
            print_report_table(r);
            first = false;
        }
    }

    for (const FitReport& r : reports) {
        if (!r.optim.converged) return kExitNoConverge;
    }
    return kExitOk;
}

int cmd_reproduce(const std::string& format, const OptimOpts& optim,
                  const std::vector<std::string>& overrides) {
    std::optional<std::map<std::string, DataSet>> replaced;
    if (!overrides.empty()) {
        replaced = embedded_datasets();
        for (const std::string& ov : overrides) {
            const std::size_t eq = ov.find('=');
            if (eq == std::string::npos) {
                throw CLI::ValidationError("--override-data expects country=path");
            }
            const std::string country = ov.substr(0, eq);
            DataSet set = load_dataset(ov.substr(eq + 1));
            set.label = country;
            (*replaced)[country] = std::move(set);
        }
    }

    const ReproReport report =
        reproduce_tables(to_config(optim), SeriesPolicy{}, optim.rounded,
                         replaced ? &*replaced : nullptr);

    auto fitted_row = [](const ReproCell& c) {
        std::ostringstream os;
        os << c.country << " / " << short_name(c.kind) << " / fitted: ";
        if (c.fitted) {
            os << fmt(c.fitted->sse_average, 4) << " (ref "
               << fmt(c.paper_sse_average, 4) << ", ratio "
               << fmt(c.fitted->sse_average / c.paper_sse_average, 4)
               << ") sse_orig " << fmt(c.fitted->sse_original, 4) << " "
               << (c.fitted_pass ? "PASS" : "FAIL");
        } else {
            os << "error: " << c.fitted_error << " FAIL";
        }
        return os.str();
    };
    auto published_row = [](const ReproCell& c) {
        std::ostringstream os;
        os << c.country << " / " << short_name(c.kind) << " / published: "
           << fmt(c.paper_sse_average, 4);
        if (c.published_eval) {
            const auto [avg, orig] = *c.published_eval;
            os << " -> eval " << fmt(avg, 4) << " ("
               << fmt(100.0 * (avg / c.paper_sse_average - 1.0), 2)
               << "%), orig " << fmt(c.paper_sse_original, 4) << " -> eval "
               << fmt(orig, 4) << " ("
               << fmt(100.0 * (orig / c.paper_sse_original - 1.0), 2) << "%) "
               << (c.published_pass ? "PASS" : "FAIL");
        } else {
            os << " error: " << c.published_error << " FAIL";
        }
        return os.str();
    };

    if (format == "json") {
        json arr = json::array();
        for (const ReproCell& c : report.cells) {
            json cell{{"country", c.country},
                      {"model", short_name(c.kind)},
                      {"paper_sse_average", c.paper_sse_average},
                      {"paper_sse_original", c.paper_sse_original},
                      {"fitted_pass", c.fitted_pass},
                      {"published_pass", c.published_pass}};
            if (c.fitted) cell["fitted"] = report_to_json(*c.fitted);
            if (!c.fitted_error.empty()) cell["fitted_error"] = c.fitted_error;
            if (c.published_eval) {
                cell["published_eval"] = {{"sse_average", c.published_eval->first},
                                          {"sse_original", c.published_eval->second}};
            }
            if (!c.published_error.empty()) cell["published_error"] = c.published_error;
            arr.push_back(std::move(cell));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "country,model,cell,sse_average,sse_original,"
                     "ref_sse_average,ref_sse_original,pass\n";
        for (const ReproCell& c : report.cells) {
            std::cout << c.country << "," << short_name(c.kind) << ",fitted,"
                      << (c.fitted ? fmt_full(c.fitted->sse_average) : "")
                      << ","
                      << (c.fitted ? fmt_full(c.fitted->sse_original) : "")
                      << "," << fmt_full(c.paper_sse_average) << ","
                      << fmt_full(c.paper_sse_original) << ","
                      << (c.fitted_pass ? "true" : "false") << "\n";
            std::cout << c.country << "," << short_name(c.kind) << ",published,"
                      << (c.published_eval ? fmt_full(c.published_eval->first) : "")
                      << ","
                      << (c.published_eval ? fmt_full(c.published_eval->second) : "")
                      << "," << fmt_full(c.paper_sse_average) << ","
                      << fmt_full(c.paper_sse_original) << ","
                      << (c.published_pass ? "true" : "false") << "\n";
        }
    } else {
        for (const ReproCell& c : report.cells) {
            std::cout << fitted_row(c) << "\n" << published_row(c) << "\n";
        }
        std::cout << (report.all_pass() ? "all cells PASS" : "some cells FAIL")
                  << "\n";
    }
    return report.all_pass() ? kExitOk : kExitRepro;
}

struct MlEvalOpts {
    double alpha = 0.0;
    double beta = 1.0;
    std::optional<double> gamma;
    std::optional<double> q;
    std::optional<double> z;
    std::string z_range;
};

int cmd_ml_eval(const MlEvalOpts& opts, const std::string& format) {
    if (opts.q && !opts.gamma) {
        throw CLI::ValidationError("--q requires --gamma");
    }
    std::vector<double> zs;
    if (opts.z) {
        zs.push_back(*opts.z);
    }
    if (!opts.z_range.empty()) {
        double lo = 0, hi = 0;
        long n = 0;
        if (std::sscanf(opts.z_range.c_str(), "%lf:%lf:%ld", &lo, &hi, &n) != 3 ||
            n < 1) {
            throw CLI::ValidationError("--z-range expects lo:hi:n");
        }
        const double step = n > 1 ? (hi - lo) / static_cast<double>(n - 1) : 0.0;
        for (long i = 0; i < n; ++i) zs.push_back(lo + step * static_cast<double>(i));
    }
    if (zs.empty()) {
        throw CLI::RequiredError("--z or --z-range");
    }

    const SeriesPolicy policy;
    auto evaluate = [&](double z) {
        if (opts.q) {
            return ml_shukla({opts.alpha, opts.beta, *opts.gamma, *opts.q}, z,
                             policy);
        }
        if (opts.gamma) {
            return ml_prabhakar({opts.alpha, opts.beta, *opts.gamma}, z, policy);
        }
        return ml_two({opts.alpha, opts.beta}, z, policy);
    };

    std::vector<std::pair<double, double>> values;
    values.reserve(zs.size());
    for (double z : zs) values.emplace_back(z, evaluate(z));

    if (format == "json") {
        json arr = json::array();
        for (const auto& [z, v] : values) arr.push_back({{"z", z}, {"value", v}});
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "z,value\n";
        for (const auto& [z, v] : values) {
            std::cout << fmt_full(z) << "," << fmt_full(v) << "\n";
        }
    } else {
        for (const auto& [z, v] : values) {
            std::cout << fmt_full(z) << "  " << fmt_full(v) << "\n";
        }
    }
    return kExitOk;
}

int cmd_bin(const DataOpts& data_opts, const std::string& format,
            double bin_width) {
    const DataSet data = resolve_dataset(data_opts);
    const std::vector<AveragedPoint> points = bin_average(data, bin_width);

    if (format == "json") {
        json arr = json::array();
        for (const AveragedPoint& p : points) {
            arr.push_back({{"level_low", p.level_low},
                           {"level_high", p.level_high},
                           {"mean_unemployment", p.mean_unemployment},
                           {"mean_inflation", p.mean_inflation},
                           {"count", p.count}});
        }
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "level_low,level_high,mean_unemployment,mean_inflation,count\n";
        for (const AveragedPoint& p : points) {
            std::cout << fmt_level(p.level_low) << "," << fmt_level(p.level_high)
                      << "," << fmt(p.mean_unemployment, 3) << ","
                      << fmt(p.mean_inflation, 3) << "," << p.count << "\n";
        }
    } else {
        std::cout << "dataset: " << data.label << "\n";
        for (const AveragedPoint& p : points) {
            std::cout << "level " << fmt_level(p.level_low) << "-"
                      << fmt_level(p.level_high) << "  unemployment "
                      << fmt(p.mean_unemployment, 3) << "  inflation "
                      << fmt(p.mean_inflation, 3) << "  count " << p.count
                      << "\n";
        }
    }
    return kExitOk;
}

struct DemoOpts {
    std::string target;
    double alpha = 0.3;
    double beta = 2.0;
    std::optional<double> lo;
    std::optional<double> hi;
    std::size_t points = 30;
    std::size_t samples = 200;
    std::string emit_target;
    std::string emit_fit;
};

int cmd_demo(const DemoOpts& opts, const std::string& format,
             const OptimOpts& optim) {
    DemoTarget target = DemoTarget::sine;
    if (opts.target == "damped-cos") target = DemoTarget::damped_cos;
    if (opts.target == "exp-erfc") target = DemoTarget::exp_erfc;

    DemoSpec spec = default_demo_spec(target);
    spec.alpha = opts.alpha;
    spec.beta = opts.beta;
    spec.n_points = opts.points;
    if (opts.lo) spec.x_lo = *opts.lo;
    if (opts.hi) spec.x_hi = *opts.hi;

    const SeriesPolicy policy = demo_series_policy();
    const FitReport report = synthetic_demo(spec, to_config(optim), policy);

    const std::string target_path =
        opts.emit_target.empty()
            ? "demo_" + std::string(demo_target_name(target)) + "_data.csv"
            : opts.emit_target;
    const std::string fit_path =
        opts.emit_fit.empty()
            ? "demo_" + std::string(demo_target_name(target)) + "_fit.csv"
            : opts.emit_fit;

    write_curve(target_path,
                [&](double x) {
                    return demo_target_value(target, x, spec.alpha, spec.beta);
                },
                spec.x_lo, spec.x_hi, spec.n_points);
    const double fit_lo = spec.x_lo > 0.0 ? spec.x_lo : 1e-9;
    write_curve(fit_path,
                make_evaluator(ModelKind::mittag_leffler, report.params, policy),
                fit_lo, spec.x_hi, opts.samples);

    if (format == "json") {
        json j = report_to_json(report);
        j["target"] = demo_target_name(target);
        j["target_alpha"] = spec.alpha;
        j["target_beta"] = spec.beta;
        j["x_lo"] = spec.x_lo;
        j["x_hi"] = spec.x_hi;
        j["n_points"] = spec.n_points;
        j["target_file"] = target_path;
        j["fit_file"] = fit_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "target: " << demo_target_name(target);
        if (target == DemoTarget::damped_cos) {
            std::cout << " (alpha=" << fmt(spec.alpha, 4)
                      << ", beta=" << fmt(spec.beta, 4) << ")";
        }
        std::cout << "\nrange: [" << fmt_level(spec.x_lo) << ", "
                  << fmt_level(spec.x_hi) << "], " << spec.n_points
                  << " points\n";
        print_report_table(report);
        std::cout << "target samples: " << target_path
                  << "\nfitted samples: " << fit_path << "\n";
    }
    return report.optim.converged ? kExitOk : kExitNoConverge;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mittag-Leffler special functions and unemployment/inflation "
                 "curve fitting"};
    app.require_subcommand(1);

    std::string format = "table";
    auto add_format_flag = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
    };

    // fit
    auto* fit = app.add_subcommand("fit", "fit a model to a dataset");
    add_format_flag(fit);
    DataOpts fit_data;
    add_data_flags(fit, fit_data);
    std::string fit_model_flag;
    fit->add_option("--model", fit_model_flag, "model to fit")
        ->check(CLI::IsMember({"power", "exp", "ml", "all"}))
        ->required();
    OptimOpts fit_optim;
    add_optim_flags(fit, fit_optim);
    std::string emit_curve;
    fit->add_option("--emit-curve", emit_curve, "write fitted-curve samples (x,y CSV)");
    std::size_t fit_samples = 200;
    fit->add_option("--samples", fit_samples, "curve sample count")
        ->capture_default_str();

    // reproduce
    auto* repro = app.add_subcommand(
        "reproduce", "fit all models to both built-in datasets and compare "
                     "against the bundled reference results");
    add_format_flag(repro);
    OptimOpts repro_optim;
    add_optim_flags(repro, repro_optim);
    std::vector<std::string> overrides;
    repro->add_option("--override-data", overrides,
                      "country=path substitute for a built-in dataset (testing)");

    // ml-eval
    auto* mleval = app.add_subcommand("ml-eval",
                                      "evaluate a Mittag-Leffler type function");
    add_format_flag(mleval);
    MlEvalOpts ml_opts;
    mleval->add_option("--alpha", ml_opts.alpha, "alpha > 0")->required();
    mleval->add_option("--beta", ml_opts.beta, "beta (default 1)");
    mleval->add_option("--gamma", ml_opts.gamma, "Prabhakar gamma");
    mleval->add_option("--q", ml_opts.q, "Shukla-Prajapati q (requires --gamma)");
    mleval->add_option("--z", ml_opts.z, "single argument");
    mleval->add_option("--z-range", ml_opts.z_range, "lo:hi:n grid");

    // bin
    auto* bin = app.add_subcommand("bin", "print per-level bin averages");
    add_format_flag(bin);
    DataOpts bin_data;
    add_data_flags(bin, bin_data);
    double bin_width = 1.0;
    bin->add_option("--bin-width", bin_width, "level width")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // demo
    auto* demo = app.add_subcommand("demo",
                                    "fit the Mittag-Leffler model to a "
                                    "synthetic generating function");
    add_format_flag(demo);
    DemoOpts demo_opts;
    demo->add_option("--target", demo_opts.target, "generating function")
        ->check(CLI::IsMember({"sine", "damped-cos", "exp-erfc"}))
        ->required();
    demo->add_option("--alpha", demo_opts.alpha, "damped-cos decay rate")
        ->capture_default_str();
    demo->add_option("--beta", demo_opts.beta, "damped-cos frequency")
        ->capture_default_str();
    demo->add_option("--lo", demo_opts.lo, "range start");
    demo->add_option("--hi", demo_opts.hi, "range end");
    demo->add_option("--points", demo_opts.points, "target sample count")
        ->capture_default_str();
    demo->add_option("--samples", demo_opts.samples, "fitted-curve sample count")
        ->capture_default_str();
    demo->add_option("--emit-target", demo_opts.emit_target, "target sample file");
    demo->add_option("--emit-fit", demo_opts.emit_fit, "fitted-curve sample file");
    OptimOpts demo_optim;
    add_optim_flags(demo, demo_optim, /*with_rounded=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (fit->parsed()) {
            return cmd_fit(fit_data, fit_model_flag, format, fit_optim,
                           emit_curve, fit_samples);
        }
        if (repro->parsed()) {
            return cmd_reproduce(format, repro_optim, overrides);
        }
        if (mleval->parsed()) {
            return cmd_ml_eval(ml_opts, format);
        }
        if (bin->parsed()) {
            return cmd_bin(bin_data, format, bin_width);
        }
        if (demo->parsed()) {
            return cmd_demo(demo_opts, format, demo_optim);
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const ValidationError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const DegenerateDataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const PoleError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const SeriesGuardError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const SeriesConvergenceError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const OverflowError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const DomainError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
