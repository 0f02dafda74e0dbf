// Command-line front end: identity verification suites, the determinant
// asymptotics experiment, kernel evaluation, walk moments, and the
// constant-term probe.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szego/asymptotics.hpp"
#include "szego/experiment.hpp"

namespace {

struct OutputPaths {
    std::string csv;
    std::string json;
    std::string svg;
};

void add_output_flags(CLI::App* app, OutputPaths* out) {
    app->add_option("--out", out->csv, "write CSV to this path");
    app->add_option("--json", out->json, "write JSON report to this path");
    app->add_option("--plot", out->svg, "write SVG residual chart to this path");
}

int emit(const szego::cli::Report& rep, const OutputPaths& out) {
    if (!out.csv.empty()) szego::cli::write_csv(rep, out.csv);
    if (!out.json.empty()) szego::cli::write_json(rep, out.json);
    if (!out.svg.empty()) szego::cli::write_svg(rep, out.svg);

    for (const auto& c : rep.coefficients) {
        if (c.fitted && std::isfinite(c.predicted))
            std::printf("%-12s measured % .12g   predicted % .12g   delta % .3g\n",
                        c.label.c_str(), c.measured, c.predicted, c.delta);
        else
            std::printf("%-12s measured % .12g\n", c.label.c_str(), c.measured);
    }
    for (const auto& [k, v] : rep.diagnostics) std::printf("# %s = %.6g\n", k.c_str(), v);
    for (const auto& f : rep.failures) std::printf("FAIL %s\n", f.c_str());
    if (rep.failures.empty())
        std::printf("ok\n");
    else
        std::printf("%zu failure(s)\n", rep.failures.size());
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Szego-type determinant asymptotics and combinatorial identity checks"};
    app.require_subcommand(1);

    // verify <kind>
    std::string verify_kind;
    std::uint64_t seed = 1;
    szego::cli::VerifyCaps caps;
    OutputPaths verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run an identity verification suite");
    verify->add_option("kind", verify_kind, "hd|ghd|bst|rw|trace-identity|commutation")->required();
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--m-cap", caps.m_cap, "vector-length cap");
    verify->add_option("--n-cap", caps.n_cap, "power cap");
    verify->add_option("--cases", caps.cases, "number of random cases");
    add_output_flags(verify, &verify_out);

    // szego run <config>
    std::string szego_config;
    OutputPaths szego_out;
    double tol_override = 0.0;
    CLI::App* szego_cmd = app.add_subcommand("szego", "determinant asymptotics");
    CLI::App* szego_run = szego_cmd->add_subcommand("run", "run the experiment from a config file");
    szego_run->add_option("config", szego_config, "key = value config file")->required();
    szego_run->add_option("--tol", tol_override, "override series tolerance");
    add_output_flags(szego_run, &szego_out);

    // phi eval y1 y2 y3
    std::vector<double> phi_args;
    double phi_tol = 1e-11;
    std::string phi_reading = "y3";
    CLI::App* phi_cmd = app.add_subcommand("phi", "log-kernel evaluation");
    CLI::App* phi_eval = phi_cmd->add_subcommand("eval", "evaluate the kernel at (y1, y2, y3)");
    phi_eval->add_option("y", phi_args, "y1 y2 y3")->expected(3)->required();
    phi_eval->add_option("--tol", phi_tol, "quadrature tolerance");
    phi_eval->add_option("--reading", phi_reading, "y3|integrated: third-argument reading");

    // rw moments <config>
    std::string rw_config;
    OutputPaths rw_out;
    CLI::App* rw_cmd = app.add_subcommand("rw", "random-walk maximum moments");
    CLI::App* rw_moments = rw_cmd->add_subcommand("moments", "exact moments for a configured walk");
    rw_moments->add_option("config", rw_config, "key = value config file")->required();
    add_output_flags(rw_moments, &rw_out);

    // probe constant <config>
    std::string probe_config;
    OutputPaths probe_out;
    CLI::App* probe_cmd = app.add_subcommand("probe", "matrix-model probes");
    CLI::App* probe_const = probe_cmd->add_subcommand("constant", "constant-term probe");
    probe_const->add_option("config", probe_config, "key = value config file")->required();
    add_output_flags(probe_const, &probe_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            return emit(szego::cli::run_verify_suite(verify_kind, seed, caps), verify_out);
        }
        if (*szego_run) {
            szego::cli::ExperimentConfig cfg = szego::cli::ExperimentConfig::load(szego_config);
            if (tol_override > 0.0) cfg.tol = tol_override;
            return emit(szego::cli::run_szego_experiment(cfg), szego_out);
        }
        if (*phi_eval) {
            if (phi_reading != "y3" && phi_reading != "integrated")
                throw szego::cli::ConfigError("--reading must be y3 or integrated");
            const auto reading = phi_reading == "y3"
                                     ? szego::asym::PhiReading::kThirdArgFixed
                                     : szego::asym::PhiReading::kThirdArgIntegrated;
            const double v =
                szego::asym::phi_log(phi_args[0], phi_args[1], phi_args[2], phi_tol, reading);
            std::printf("%.15g\n", v);
            return 0;
        }
        if (*rw_moments) {
            return emit(szego::cli::run_rw_moments(szego::cli::RwConfig::load(rw_config)), rw_out);
        }
        if (*probe_const) {
            return emit(szego::cli::run_probe_constant(szego::cli::ProbeConfig::load(probe_config)),
                        probe_out);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return szego::cli::classify_error(e);
    }
    return 2;
}
