#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "mlfit/fitting.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(MLFIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("mlfit_cli_test_" + name);
}

int count_lines(const std::string& s) {
    int lines = 0;
    for (char c : s) lines += c == '\n';
    return lines;
}

double last_number(const std::string& s) {
    std::istringstream in(s);
    std::string token, last;
    while (in >> token) last = token;
    return std::stod(last);
}

}  // namespace

TEST_CASE("ml-eval evaluates the whole function family") {
    auto r = run("ml-eval --alpha 1 --z 1");
    CHECK(r.exit_code == 0);
    CHECK(last_number(r.output) == doctest::Approx(2.718281828459045).epsilon(1e-12));

    r = run("ml-eval --alpha 2 --beta 1 --z -1");
    CHECK(r.exit_code == 0);
    CHECK(last_number(r.output) == doctest::Approx(0.5403023058681397).epsilon(1e-12));

    r = run("ml-eval --alpha 1 --beta 1 --gamma 2 --z 1");
    CHECK(r.exit_code == 0);
    CHECK(last_number(r.output) == doctest::Approx(5.43656365691809).epsilon(1e-12));

    r = run("ml-eval --alpha 1.5 --beta 2 --gamma 2 --q 2 --z 0.5");
    CHECK(r.exit_code == 0);
    CHECK(last_number(r.output) == doctest::Approx(3.227572265194034).epsilon(1e-12));

    r = run("ml-eval --alpha 1 --z-range 0:2:5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 6);  // header + 5 rows
}

TEST_CASE("ml-eval error exits") {
    CHECK(run("ml-eval --alpha -1 --z 1").exit_code == 2);   // invalid parameter
    CHECK(run("ml-eval --alpha 1").exit_code == 2);          // no z given
    CHECK(run("ml-eval --alpha 1 --q 2 --z 1").exit_code == 2);  // q without gamma
    CHECK(run("ml-eval --alpha 1 --z 150").exit_code == 6);  // series guard
    CHECK(run("ml-eval --alpha 0.25 --z 99").exit_code == 6);  // value overflows
}

TEST_CASE("bin prints the averaged table") {
    auto r = run("bin --country france");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 7);  // label + 6 levels
    CHECK(r.output.find("level 6-7") != std::string::npos);
    CHECK(r.output.find("6.349") != std::string::npos);
    CHECK(r.output.find("13.060") != std::string::npos);

    r = run("bin --country germany --format csv");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 10);  // header + 9 levels
    CHECK(r.output.find("9,10,9.636,1.055,3") != std::string::npos);
}

TEST_CASE("fit emits a self-consistent JSON report") {
    auto r = run("fit --country france --model ml --format json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["model"] == "ml");
    CHECK(j["dataset"] == "france");
    CHECK(j["converged"] == true);
    REQUIRE(j["params"].contains("alpha"));
    REQUIRE(j["params"].contains("C"));

    // recomputing the SSE from the reported parameters reproduces the report
    const std::vector<double> params{j["params"]["alpha"], j["params"]["beta"],
                                     j["params"]["a"], j["params"]["C"]};
    const auto [avg, orig] = mlfit::evaluate_published(
        mlfit::ModelKind::mittag_leffler, params,
        mlfit::embedded_datasets().at("france"));
    CHECK(std::fabs(avg - j["sse_average"].get<double>()) <= 1e-9);
    CHECK(std::fabs(orig - j["sse_original"].get<double>()) <= 1e-9);
}

TEST_CASE("fit --model all reports ml, exp, power in order") {
    const auto r = run("fit --country germany --model all");
    CHECK(r.exit_code == 0);
    const auto ml = r.output.find("model: mittag_leffler");
    const auto ex = r.output.find("model: exponential");
    const auto pw = r.output.find("model: power");
    REQUIRE(ml != std::string::npos);
    REQUIRE(ex != std::string::npos);
    REQUIRE(pw != std::string::npos);
    CHECK(ml < ex);
    CHECK(ex < pw);
}

TEST_CASE("fit rejects bad data with a line-numbered message") {
    const fs::path bad = temp_file("bad.csv");
    std::ofstream(bad) << "year,unemployment_rate,inflation_rate\n"
                       << "1980,6.0,1.0\n1981,zero,2.0\n";
    const auto r = run("fit --data " + bad.string() + " --model power");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("line 3") != std::string::npos);
    fs::remove(bad);

    CHECK(run("fit --data /nonexistent.csv --model power").exit_code == 3);
    CHECK(run("fit --model power").exit_code == 2);        // no dataset chosen
    CHECK(run("fit --country france").exit_code == 2);     // no model
    CHECK(run("fit --country spain --model ml").exit_code == 2);
    CHECK(run("--nonsense").exit_code == 2);
}

TEST_CASE("fit curve emission is deterministic") {
    const fs::path curve = temp_file("curve.csv");
    const std::string cmd = "fit --country france --model exp --samples 50 "
                            "--emit-curve " + curve.string();
    CHECK(run(cmd).exit_code == 0);
    std::ifstream first(curve);
    std::stringstream a;
    a << first.rdbuf();
    CHECK(count_lines(a.str()) == 51);  // header + 50 samples
    CHECK(run(cmd).exit_code == 0);
    std::ifstream second(curve);
    std::stringstream b;
    b << second.rdbuf();
    CHECK(a.str() == b.str());
    fs::remove(curve);
}

TEST_CASE("reproduce prints the 12-cell comparison") {
    // reduced optimizer budget keeps this fast; the published rows do not
    // depend on it
    const auto table = run("reproduce --max-iter 250 --restarts 1");
    CHECK(table.exit_code == 5);  // the germany/ml published row cannot match
    CHECK(table.output.find("france / ml / published: 1.1843") !=
          std::string::npos);
    CHECK(table.output.find("germany / power / fitted:") != std::string::npos);

    const auto csv = run("reproduce --max-iter 250 --restarts 1 --format csv");
    CHECK(csv.exit_code == 5);
    CHECK(count_lines(csv.output) == 13);  // header + 12 cells
    CHECK(csv.output.find("france,ml,published") != std::string::npos);
}

TEST_CASE("reproduce with an injected wrong dataset fails") {
    const fs::path fake = temp_file("fake_france.csv");
    {
        std::ofstream out(fake);
        out << "year,unemployment_rate,inflation_rate\n";
        for (int y = 1980; y <= 2011; ++y) {
            out << y << "," << 5.0 + 0.1 * (y - 1980) << ",9.9\n";
        }
    }
    const auto r = run("reproduce --max-iter 150 --restarts 0 --override-data "
                       "france=" + fake.string());
    CHECK(r.exit_code == 5);
    fs::remove(fake);
}

TEST_CASE("demo fits a synthetic target and writes both sample files") {
    const fs::path target = temp_file("demo_target.csv");
    const fs::path fitted = temp_file("demo_fit.csv");
    const auto r = run("demo --target sine --points 12 --samples 25 "
                       "--emit-target " + target.string() +
                       " --emit-fit " + fitted.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("target: sine") != std::string::npos);
    CHECK(r.output.find("converged: yes") != std::string::npos);

    std::ifstream tf(target), ff(fitted);
    std::stringstream ts, fsam;
    ts << tf.rdbuf();
    fsam << ff.rdbuf();
    CHECK(count_lines(ts.str()) == 13);   // header + 12 target samples
    CHECK(count_lines(fsam.str()) == 26); // header + 25 fitted samples
    fs::remove(target);
    fs::remove(fitted);

    const auto echo = run("demo --target damped-cos --alpha 0.4 --beta 1.5 "
                          "--points 10 --samples 8 --max-iter 120 --restarts 0 "
                          "--emit-target " + target.string() +
                          " --emit-fit " + fitted.string());
    CHECK(echo.output.find("alpha=0.4000") != std::string::npos);
    CHECK(echo.output.find("beta=1.5000") != std::string::npos);
    fs::remove(target);
    fs::remove(fitted);
}
