// Command-line front end: transforms, convolution, the integral-equation
// solver, kernel evaluation, and the verification suite, over catalog
// functions or CSV data.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hht/convolution.hpp"
#include "hht/csv.hpp"
#include "hht/grid.hpp"
#include "hht/hilbert.hpp"
#include "hht/mellin.hpp"
#include "hht/sie.hpp"
#include "hht/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;

struct GridArgs {
    std::size_t n = 4096;
    double u_min = -40.0;
    double u_max = 40.0;
};

hht::FunctionSpec parse_spec(const std::string& text)
{
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    std::vector<double> params;
    if (colon != std::string::npos && name != "csv") {
        std::istringstream ss(text.substr(colon + 1));
        std::string field;
        while (std::getline(ss, field, ','))
            params.push_back(std::stod(field));
    }
    const auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("spec '" + text + "': expected " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "zero")
        return hht::FunctionSpec::zero();
    if (name == "bump") {
        want(2);
        return hht::FunctionSpec::bump(params[0], params[1]);
    }
    if (name == "expdecay")
        return hht::FunctionSpec::exp_decay();
    if (name == "rational1p")
        return hht::FunctionSpec::rational1p();
    if (name == "powerexp") {
        want(1);
        return hht::FunctionSpec::power_exp(params[0]);
    }
    if (name == "indicator01")
        return hht::FunctionSpec::indicator01();
    if (name == "loggauss") {
        want(2);
        return hht::FunctionSpec::log_gaussian(params[0], params[1]);
    }
    if (name == "csv") {
        if (colon == std::string::npos)
            throw std::invalid_argument("spec 'csv' needs a path: csv:PATH");
        return hht::read_samples_csv(text.substr(colon + 1));
    }
    throw std::invalid_argument("unknown function spec '" + text + "'");
}

void emit_rows(const std::string& out_path, const std::string& format,
               const std::vector<double>& x,
               const std::vector<hht::complexd>& v)
{
    std::ostringstream buf;
    if (format == "csv") {
        hht::write_csv(buf, x, v);
    } else {
        json xs = json::array(), re = json::array(), im = json::array();
        for (std::size_t i = 0; i < x.size(); ++i) {
            xs.push_back(x[i]);
            re.push_back(v[i].real());
            im.push_back(v[i].imag());
        }
        json doc;
        doc["x"] = std::move(xs);
        doc["re"] = std::move(re);
        doc["im"] = std::move(im);
        buf << doc.dump(2) << '\n';
    }
    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error(out_path + ": cannot open for writing");
        out << buf.str();
    }
}

json report_to_json(const hht::verify::Report& report)
{
    json doc;
    doc["checks"] = json::array();
    for (const auto& c : report.checks) {
        json row;
        row["name"] = c.name;
        row["anchor"] = c.anchor;
        row["residual"] = c.residual;
        row["tol"] = c.tol;
        row["pass"] = c.pass;
        doc["checks"].push_back(row);
    }
    doc["pass"] = report.pass;
    doc["seed"] = report.seed;
    return doc;
}

json config_json(const GridArgs& g)
{
    json doc;
    doc["grid"] = {{"n", g.n}, {"u_min", g.u_min}, {"u_max", g.u_max}};
    doc["alpha"] = 0.2;
    doc["tail_tol"] = hht::kTailTol;
    doc["oracle_abs_tol"] = 1e-10;
    doc["pv_epsilons"] = {1e-2, 1e-3, 1e-4};
    doc["seed"] = hht::verify::Options{}.seed;
    return doc;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"half-axis Hilbert transform calculus"};
    app.require_subcommand(0, 1);
    bool show_config = false;
    app.add_flag("--show-config", show_config,
                 "print the default configuration block and exit");

    GridArgs grid_args;
    std::string out_path;
    std::string format = "csv";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", grid_args.n, "grid size (power of two)");
        cmd->add_option("--u-min", grid_args.u_min, "left log-coordinate");
        cmd->add_option("--u-max", grid_args.u_max, "right log-coordinate");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    // transform
    auto* transform = app.add_subcommand(
        "transform", "apply a transform to a catalog function or CSV data");
    std::string op = "hilbert";
    std::string f_text;
    double alpha = 0.2;
    transform->add_option("--op", op, "hilbert, hilbert-inverse or mellin")
        ->check(CLI::IsMember({"hilbert", "hilbert-inverse", "mellin"}));
    transform->add_option("--f", f_text, "input function spec")->required();
    transform->add_option("--alpha", alpha, "Mellin line abscissa");
    add_common(transform);

    // convolve
    auto* conv_cmd =
        app.add_subcommand("convolve", "convolution adapted to the transform");
    std::string g_text;
    conv_cmd->add_option("--f", f_text, "first input spec")->required();
    conv_cmd->add_option("--g", g_text, "second input spec")->required();
    conv_cmd->add_option("--alpha", alpha, "Mellin line abscissa");
    add_common(conv_cmd);

    // solve
    auto* solve_cmd =
        app.add_subcommand("solve", "solve the singular integral equation");
    solve_cmd->set_help_flag("--help", "print help"); // frees -h for --h
    std::string h_text;
    double beta = 0.25;
    solve_cmd->add_option("--h", h_text, "right-hand side spec or csv:PATH")
        ->required();
    solve_cmd->add_option("--beta", beta, "equation parameter in (0,1/2)");
    solve_cmd->add_option("--alpha", alpha, "Mellin line abscissa");
    std::string report_path;
    solve_cmd->add_option("--report", report_path,
                          "path for the JSON residual block (default stdout)");
    add_common(solve_cmd);

    // eval-kernel
    auto* kernel_cmd =
        app.add_subcommand("eval-kernel", "evaluate the resolvent kernel");
    double x_min = 0.125, x_max = 8.0;
    std::size_t points = 65;
    kernel_cmd->add_option("--beta", beta, "kernel parameter in (0,1/2)");
    kernel_cmd->add_option("--x-min", x_min, "first abscissa");
    kernel_cmd->add_option("--x-max", x_max, "last abscissa");
    kernel_cmd->add_option("--points", points, "number of log-spaced points");
    add_common(kernel_cmd);

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "run the verification suite");
    std::string suite = "all";
    std::uint64_t seed = hht::verify::Options{}.seed;
    verify_cmd->add_option("--suite", suite, "suite name (see --list)");
    verify_cmd->add_option("--seed", seed, "seed for sampled check points");
    bool list_suites = false;
    verify_cmd->add_flag("--list", list_suites, "list suite names and exit");
    verify_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (show_config && app.get_subcommands().empty()) {
            std::cout << config_json(grid_args).dump(2) << '\n';
            return kExitOk;
        }

        if (transform->parsed()) {
            const hht::LogGrid grid =
                hht::make_log_grid(grid_args.n, grid_args.u_min, grid_args.u_max);
            const hht::SampledFunction f = sample(parse_spec(f_text), grid);
            const hht::MellinLine line{alpha};
            std::vector<double> xs;
            std::vector<hht::complexd> vs;
            if (op == "mellin") {
                const hht::MellinData m = mellin_forward(f, line);
                for (std::size_t j = 0; j < m.size(); ++j) {
                    xs.push_back(m.tau(j));
                    vs.push_back(m.values[j]);
                }
            } else {
                const hht::SampledFunction h =
                    op == "hilbert" ? hilbert_forward(f, line)
                                    : hilbert_inverse(f, line);
                xs = grid.t_nodes();
                vs = h.values;
            }
            emit_rows(out_path, format, xs, vs);
            return kExitOk;
        }

        if (conv_cmd->parsed()) {
            const hht::LogGrid grid =
                hht::make_log_grid(grid_args.n, grid_args.u_min, grid_args.u_max);
            const hht::SampledFunction f = sample(parse_spec(f_text), grid);
            const hht::SampledFunction g = sample(parse_spec(g_text), grid);
            const hht::ConvolutionResult conv =
                convolve(f, g, hht::MellinLine{alpha});
            emit_rows(out_path, format, grid.t_nodes(), conv.values.values);
            return kExitOk;
        }

        if (solve_cmd->parsed()) {
            const hht::LogGrid grid =
                hht::make_log_grid(grid_args.n, grid_args.u_min, grid_args.u_max);
            const hht::SampledFunction h = sample(parse_spec(h_text), grid);
            hht::SieConfig cfg;
            cfg.alpha = alpha;
            const hht::SampledFunction f = sie_solve(h, beta, cfg);
            const hht::SampledFunction round = sie_forward(f, beta, cfg);

            // Round-trip residual in the x^{1-beta}-scaled norm.
            const hht::SampledFunction hs = power_scale(h, 1.0 - beta);
            const hht::SampledFunction ds =
                add(power_scale(round, 1.0 - beta), scale(hs, -1.0));
            const double nh = weighted_norm(hs, cfg.alpha);
            const double residual =
                nh == 0.0 ? 0.0 : weighted_norm(ds, cfg.alpha) / nh;

            emit_rows(out_path, format, grid.t_nodes(), f.values);
            json block;
            block["residual"] = residual;
            block["beta"] = beta;
            block["alpha"] = cfg.alpha;
            if (report_path.empty()) {
                std::cout << block.dump(2) << '\n';
            } else {
                std::ofstream out(report_path, std::ios::binary);
                out << block.dump(2) << '\n';
            }
            return kExitOk;
        }

        if (kernel_cmd->parsed()) {
            const hht::KernelParams params = hht::make_kernel_params(beta);
            std::vector<double> xs(points);
            std::vector<hht::complexd> vs(points);
            const double step =
                points > 1
                    ? (std::log(x_max) - std::log(x_min)) / double(points - 1)
                    : 0.0;
            for (std::size_t i = 0; i < points; ++i) {
                xs[i] = std::exp(std::log(x_min) + double(i) * step);
                vs[i] = kernel_value(params, xs[i]);
            }
            emit_rows(out_path, format, xs, vs);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            if (list_suites) {
                for (const auto& name : hht::verify::suite_names())
                    std::cout << name << '\n';
                return kExitOk;
            }
            hht::verify::Options opt;
            opt.seed = seed;
            const hht::verify::Report report =
                hht::verify::run_suite(suite, opt);
            for (const auto& c : report.checks)
                std::cerr << (c.pass ? "pass" : "FAIL") << "  " << c.name
                          << "  (" << c.ms << " ms)\n";
            const std::string text = report_to_json(report).dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                out << text;
            }
            return report.pass ? kExitOk : kExitCheckFailed;
        }

        std::cerr << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
