// grcayley: Cayley graphs over Galois rings GR(p^e, p^(er)).

#include <CLI11.hpp>

#include <iostream>

#include "grcayley/cli.hpp"

namespace {

void ring_options(CLI::App* app, grc::cli::RunConfig& cfg) {
    app->add_option("--p", cfg.p, "prime p")->capture_default_str();
    app->add_option("--e", cfg.e, "exponent e >= 2 (characteristic p^e)")->capture_default_str();
    app->add_option("--r", cfg.r, "degree r >= 2")->capture_default_str();
    app->add_option("--modulus", cfg.modulus, "modulus coefficients c0,c1,...,1 (default: searched)");
    app->add_option("--seed", cfg.seed, "modulus search seed (0 = lexicographic)")->capture_default_str();
    app->add_option("--output,-o", cfg.output, "output file (default stdout)");
}

void graph_options(CLI::App* app, grc::cli::RunConfig& cfg) {
    ring_options(app, cfg);
    app->add_option("--gamma", cfg.gamma, "unit gamma as a0,a1,... (default 1)");
    app->add_option("--threads", cfg.threads, "worker threads (default GRCAYLEY_THREADS or all cores)");
}

}  // namespace

int main(int argc, char** argv) {
    using grc::cli::Command;
    grc::cli::RunConfig cfg;
    std::string format;

    CLI::App app{"Cayley graphs over Galois rings: construction, spectra, claim checks"};
    app.require_subcommand(1);

    auto* ring_info = app.add_subcommand("ring-info", "describe the ring as JSON");
    ring_options(ring_info, cfg);

    auto* export_cmd = app.add_subcommand("graph-export", "write the edge list");
    graph_options(export_cmd, cfg);

    auto* spectrum = app.add_subcommand("spectrum", "full spectrum with multiplicities");
    graph_options(spectrum, cfg);
    spectrum->add_option("--format", format, "csv or json");

    auto* verify = app.add_subcommand("verify", "run claim checks and write a JSON report");
    graph_options(verify, cfg);
    verify->add_option("--checks", cfg.checks,
                       "interval,wcu,bhk,ramanujan,girth,connectivity,energy,residue or all")
        ->delimiter(',')
        ->capture_default_str();

    auto* family = app.add_subcommand("family", "sparse family table for a rational delta");
    family->add_option("--p", cfg.p, "prime p")->capture_default_str();
    family->add_option("--delta", cfg.delta, "rational in (0, 1/2]")->capture_default_str();
    family->add_option("--r-min", cfg.r_min, "smallest r")->capture_default_str();
    family->add_option("--r-max", cfg.r_max, "largest r")->capture_default_str();
    family->add_option("--threads", cfg.threads, "worker threads");
    family->add_option("--format", format, "csv or json");
    family->add_option("--output,-o", cfg.output, "output file (default stdout)");

    for (auto* sub : {ring_info, export_cmd, verify}) sub->add_option("--format", format, "output format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return grc::cli::kExitUsage;
    }

    const auto* chosen = app.get_subcommands().front();
    cfg.command = *grc::cli::parse_command(chosen->get_name());
    if (!format.empty()) {
        cfg.format = grc::cli::parse_format(format);
        if (!cfg.format) {
            std::cerr << "error: unknown format '" << format << "'\n";
            return grc::cli::kExitUsage;
        }
    }
    return grc::cli::run(cfg, std::cout, std::cerr);
}
