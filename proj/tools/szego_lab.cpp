#include "szego/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace szego;

namespace {

std::pair<std::string, std::string> split_pair(const std::string& s, const std::string& what)
{
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError(what + ": expected key=value, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

int run(int argc, char** argv)
{
    CLI::App app{"szego-lab: verification suites for Szego minimum problems"};
    std::string suite, config, out, format, filter, measure, generate;
    int bits = 0, grid = 0, degree = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> tols, params;
    bool list = false;

    auto* o_suite = app.add_option("--suite", suite, "suite name");
    app.add_option("--config", config, "key=value file; flags given on the command line win");
    auto* o_bits = app.add_option("--precision-bits", bits, "working precision in bits");
    auto* o_grid = app.add_option("--grid", grid, "verification grid size");
    auto* o_seed = app.add_option("--seed", seed, "random seed");
    auto* o_out = app.add_option("--out", out, "output path (stdout when absent)");
    auto* o_format = app.add_option("--format", format, "json or csv");
    auto* o_filter = app.add_option("--filter", filter, "run only case ids with this prefix");
    auto* o_measure = app.add_option("--measure", measure, "measure file for an extra discrete-bounds case");
    auto* o_degree = app.add_option("--degree", degree, "degree for the measure-file case");
    app.add_option("--tol", tols, "tolerance override key=value, repeatable");
    app.add_flag("--list", list, "print suite names, or case ids of the chosen suite");
    app.add_option("--generate", generate, "export a generated measure as JSON");
    app.add_option("--param", params, "generator parameter key=value, repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!generate.empty()) {
            std::map<std::string, std::string> p;
            for (const auto& s : params) p.insert(split_pair(s, "--param"));
            const std::string text = measure_to_json(generate_measure(generate, p)) + "\n";
            if (out.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(out);
                if (!(f << text)) throw std::runtime_error("cannot write '" + out + "'");
            }
            return 0;
        }

        SuiteConfig cfg;
        if (!config.empty())
            for (const auto& [k, v] : read_config_file(config)) apply_setting(cfg, k, v);
        if (*o_suite) apply_setting(cfg, "suite", suite);
        if (*o_bits) cfg.precision_bits = bits;
        if (*o_grid) cfg.grid = grid;
        if (*o_seed) cfg.seed = seed;
        if (*o_out) cfg.out = out;
        if (*o_format) cfg.format = format;
        if (*o_filter) cfg.filter = filter;
        if (*o_measure) cfg.measure_path = measure;
        if (*o_degree) cfg.measure_degree = degree;
        for (const auto& s : tols) {
            auto [k, v] = split_pair(s, "--tol");
            apply_setting(cfg, "tol." + k, v);
        }

        if (list && cfg.suite.empty()) {
            for (const auto& s : suite_names()) std::cout << s << "\n";
            return 0;
        }
        if (cfg.suite.empty()) throw ConfigError("no suite given; choose one of --list");
        if (list) {
            for (const auto& id : suite_case_ids(cfg)) std::cout << id << "\n";
            return 0;
        }

        validate(cfg);
        const Report r = run_suite(cfg);
        emit_report(r, cfg.format, cfg.out);
        std::cerr << r.suite << ": " << r.passed << " passed, " << r.failed << " failed\n";
        return r.all_pass() ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
