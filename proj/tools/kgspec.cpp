#include "kg/cli/commands.hpp"
#include "kg/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Relativistic bound and scattering states of the position-dependent-mass "
                 "Klein-Gordon equation with a Hulthen plus deformed hyperbolic potential"};
    app.require_subcommand(1);

    std::string config_path;
    kg::cli::GlobalOptions opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration");
        sub->add_option("--tol", opt.tol, "override the config tolerance");
        sub->add_option("--solver", opt.solver, "analytic | oracle")
            ->check(CLI::IsMember({"analytic", "oracle"}));
        sub->add_option("--jobs", opt.jobs, "concurrent rows")->check(CLI::PositiveNumber);
        sub->add_option("--out", opt.out, "output file (default from config, '-' = stdout)");
    };

    auto* t1 = app.add_subcommand("table1", "reference bound-energy regression table");
    add_common(t1);
    auto* sw = app.add_subcommand("sweep", "bound energies against one swept parameter");
    add_common(sw);
    auto* sc = app.add_subcommand("scatter", "phase shift and normalization over an energy range");
    add_common(sc);
    auto* vf = app.add_subcommand("verify", "internal consistency and oracle cross-checks");
    add_common(vf);
    vf->add_flag("--corrupt-omega", opt.corrupt_omega,
                 "negative control: flip an omega sign and expect the Riccati check to fail");
    vf->add_option("--report-only", opt.report_only,
                   "emit a report section only (approximation)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        kg::cli::RunConfig cfg;
        if (!config_path.empty())
            cfg = kg::cli::RunConfig::from_file(config_path);
        else if (t1->parsed())
            cfg = kg::cli::RunConfig::from_json_text(kg::cli::table1_preset());
        else if (sc->parsed())
            cfg = kg::cli::RunConfig::from_json_text(kg::cli::hulthen_preset());
        else if (vf->parsed())
            cfg = kg::cli::RunConfig::from_json_text(kg::cli::table1_preset());
        else {
            std::cerr << "sweep requires --config\n";
            return 1;
        }
        if (vf->parsed() && cfg.quantum.empty()) cfg.quantum.push_back({0, 0, 3});

        if (t1->parsed()) return kg::cli::cmd_table1(cfg, opt);
        if (sw->parsed()) return kg::cli::cmd_sweep(cfg, opt);
        if (sc->parsed()) return kg::cli::cmd_scatter(cfg, opt);
        if (vf->parsed()) return kg::cli::cmd_verify(cfg, opt);
    } catch (const kg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const kg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
