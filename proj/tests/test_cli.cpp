// End-to-end checks of the command line tool: exit codes, file formats,
// and byte determinism. The binary path comes in through HHT_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hht/csv.hpp"
#include "hht/grid.hpp"
#include "hht/sie.hpp"

namespace {

std::string cli() { return HHT_CLI_PATH; }

int run_raw(const std::string& args)
{
    const std::string cmd = cli() + " " + args;
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

int run(const std::string& args)
{
    return run_raw(args + " >/dev/null 2>/dev/null");
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Row {
    double x, re, im;
};

std::vector<Row> parse_csv(const std::string& path)
{
    std::ifstream in(path);
    std::string line;
    std::getline(in, line); // header
    REQUIRE(line == "x,re,im");
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        Row r{};
        std::istringstream ss(line);
        std::string field;
        std::getline(ss, field, ',');
        r.x = std::stod(field);
        std::getline(ss, field, ',');
        r.re = std::stod(field);
        std::getline(ss, field);
        r.im = std::stod(field);
        rows.push_back(r);
    }
    return rows;
}

} // namespace

TEST_CASE("transform emits the closed-form value at x = 1")
{
    REQUIRE(run("transform --op hilbert --f rational1p --alpha 0.25 "
                "--out cli_rat.csv") == 0);
    const auto rows = parse_csv("cli_rat.csv");
    REQUIRE(rows.size() == 4096);
    bool found = false;
    for (const auto& r : rows)
        if (std::abs(r.x - 1.0) < 1e-12) {
            CHECK(std::abs(r.re) <= 1e-6);
            found = true;
        }
    CHECK(found);
    std::remove("cli_rat.csv");
}

TEST_CASE("transform of the zero function is identically zero")
{
    REQUIRE(run("transform --op hilbert --f zero --out cli_zero.csv") == 0);
    for (const auto& r : parse_csv("cli_zero.csv")) {
        CHECK(r.re == 0.0);
        CHECK(r.im == 0.0);
    }
    std::remove("cli_zero.csv");
}

TEST_CASE("parameter errors exit with code 2")
{
    CHECK(run("transform --op hilbert --f rational1p --alpha 0.7") == 2);
    CHECK(run("transform --op hilbert --f nosuchfunction") == 2);
    CHECK(run("transform --op hilbert --f bump:2,1") == 2);
    CHECK(run("solve --h zero --beta 0.25 --alpha 0.05") == 2);
    CHECK(run("verify --suite nosuch") == 2);
}

TEST_CASE("solve on a forward image recovers the round trip residual")
{
    // Build h = forward(bump) with the library, hand it to the tool as
    // CSV, and read back the solution and residual block.
    const hht::LogGrid grid = hht::default_grid();
    hht::SieConfig cfg;
    cfg.alpha = 0.2;
    const hht::SampledFunction f =
        sample(hht::FunctionSpec::bump(1.0, 2.0), grid);
    const hht::SampledFunction h = sie_forward(f, 0.25, cfg);
    {
        std::ofstream out("cli_h.csv", std::ios::binary);
        out << "t,re,im\n";
        for (std::size_t k = 0; k < grid.size(); ++k)
            out << hht::format_double(grid.t(k)) << ','
                << hht::format_double(h.values[k].real()) << ','
                << hht::format_double(h.values[k].imag()) << '\n';
    }
    REQUIRE(run("solve --h csv:cli_h.csv --beta 0.25 --alpha 0.2 "
                "--out cli_sol.csv --report cli_res.json") == 0);

    const auto doc = nlohmann::json::parse(slurp("cli_res.json"));
    CHECK(doc["residual"].get<double>() <= 1e-5);

    // solution matches the bump where it lives
    const auto rows = parse_csv("cli_sol.csv");
    double worst = 0.0;
    for (const auto& r : rows)
        if (r.x > 0.5 && r.x < 4.0)
            worst = std::max(worst,
                             std::abs(r.re - hht::FunctionSpec::bump(1.0, 2.0)(r.x)
                                                 .real()));
    CHECK(worst < 1e-5);

    std::remove("cli_h.csv");
    std::remove("cli_sol.csv");
    std::remove("cli_res.json");
}

TEST_CASE("solve of the zero right-hand side")
{
    REQUIRE(run("solve --h zero --beta 0.25 --alpha 0.2 --out cli_z.csv "
                "--report cli_zr.json") == 0);
    for (const auto& r : parse_csv("cli_z.csv")) {
        CHECK(r.re == 0.0);
        CHECK(r.im == 0.0);
    }
    const auto doc = nlohmann::json::parse(slurp("cli_zr.json"));
    CHECK(doc["residual"].get<double>() == 0.0);
    std::remove("cli_z.csv");
    std::remove("cli_zr.json");
}

TEST_CASE("isometry suite emits a single passing check")
{
    REQUIRE(run("verify --suite isometry --out cli_iso.json") == 0);
    const auto doc = nlohmann::json::parse(slurp("cli_iso.json"));
    REQUIRE(doc["checks"].size() == 1);
    CHECK(doc["checks"][0]["pass"].get<bool>());
    CHECK(doc["pass"].get<bool>());
    CHECK(doc.contains("seed"));
    std::remove("cli_iso.json");
}

TEST_CASE("identical configuration produces identical bytes")
{
    REQUIRE(run("transform --op hilbert --f bump:1,2 --alpha 0.2 "
                "--out cli_a.csv") == 0);
    REQUIRE(run("transform --op hilbert --f bump:1,2 --alpha 0.2 "
                "--out cli_b.csv") == 0);
    CHECK(slurp("cli_a.csv") == slurp("cli_b.csv"));
    CHECK(!slurp("cli_a.csv").empty());
    std::remove("cli_a.csv");
    std::remove("cli_b.csv");

    REQUIRE(run("verify --suite kernel --out cli_k1.json") == 0);
    REQUIRE(run("verify --suite kernel --out cli_k2.json") == 0);
    CHECK(slurp("cli_k1.json") == slurp("cli_k2.json"));
    std::remove("cli_k1.json");
    std::remove("cli_k2.json");
}

TEST_CASE("kernel evaluation matches the library")
{
    REQUIRE(run("eval-kernel --beta 0.25 --x-min 0.5 --x-max 2 --points 3 "
                "--out cli_kern.csv") == 0);
    const auto rows = parse_csv("cli_kern.csv");
    REQUIRE(rows.size() == 3);
    const hht::KernelParams params = hht::make_kernel_params(0.25);
    for (const auto& r : rows) {
        CHECK(r.re ==
              doctest::Approx(kernel_value(params, r.x)).epsilon(1e-12));
        CHECK(r.im == 0.0);
    }
    std::remove("cli_kern.csv");
}

TEST_CASE("configuration block prints")
{
    REQUIRE(run_raw("--show-config > cli_cfg.json 2>/dev/null") == 0);
    const auto doc = nlohmann::json::parse(slurp("cli_cfg.json"));
    CHECK(doc["grid"]["n"].get<int>() == 4096);
    CHECK(doc["alpha"].get<double>() == 0.2);
    std::remove("cli_cfg.json");
}

TEST_CASE("json output format parses")
{
    REQUIRE(run("transform --op mellin --f expdecay --alpha 0.25 "
                "--format json --out cli_m.json") == 0);
    const auto doc = nlohmann::json::parse(slurp("cli_m.json"));
    REQUIRE(doc["x"].size() == 4096);
    CHECK(doc["re"].size() == doc["x"].size());
    std::remove("cli_m.json");
}

TEST_CASE("convolve subcommand produces the symmetric product")
{
    REQUIRE(run("convolve --f bump:1,2 --g bump:1,2 --alpha 0.1 "
                "--out cli_conv.csv") == 0);
    const auto rows = parse_csv("cli_conv.csv");
    REQUIRE(rows.size() == 4096);
    double peak = 0.0;
    for (const auto& r : rows)
        peak = std::max(peak, std::abs(r.re));
    CHECK(peak > 0.0);
    std::remove("cli_conv.csv");
}
