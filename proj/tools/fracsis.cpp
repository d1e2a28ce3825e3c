#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fracsis/config.hpp"
#include "fracsis/csv.hpp"
#include "fracsis/errors.hpp"
#include "fracsis/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBlowup = 3;

fracsis::ExperimentConfig load(const std::string& path, fracsis::RunKind expected,
                               const std::string& out_override) {
    auto cfg = fracsis::ExperimentConfig::from_file(path);
    if (cfg.kind != expected)
        throw fracsis::ConfigError(path + ": run.kind is '" +
                                   fracsis::to_string(cfg.kind) +
                                   "' but the subcommand expects '" +
                                   fracsis::to_string(expected) + "'");
    if (!out_override.empty()) cfg.out_dir = out_override;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controlled fractional SIS toolkit: upwind value-function "
                 "marches, feedback trajectories, stationary profiles and "
                 "grid-refinement studies"};
    app.require_subcommand(1);

    std::string out_override;
    bool quiet = false;
    app.add_option("--out", out_override, "Output directory (overrides run.out)");
    app.add_flag("--quiet", quiet, "Suppress progress and warning output");

    std::string config_path;
    auto add_sub = [&](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->fallthrough();  // let the global --out / --quiet follow the subcommand
        sub->add_option("config", config_path, "Experiment config file")
            ->required()
            ->check(CLI::ExistingFile);
        return sub;
    };
    auto* cmd_solve = add_sub("solve", "March the value function and export profiles");
    auto* cmd_traj = add_sub("trajectory", "Synthesize feedback trajectories");
    auto* cmd_conv = add_sub("converge", "Grid-refinement study against the "
                                         "stationary profile");
    auto* cmd_sweep = add_sub("sweep", "Norm growth across orders and domain sizes");
    auto* cmd_stat = add_sub("stationary", "Export the stationary profile");

    CLI11_PARSE(app, argc, argv);

    const fracsis::RunnerOptions opts{quiet};
    try {
        if (cmd_solve->parsed()) {
            const auto cfg = load(config_path, fracsis::RunKind::kProfiles, out_override);
            fracsis::run_profiles(cfg, opts);
            if (!quiet) std::cout << "profiles written to " << cfg.out_dir.string() << "\n";
        } else if (cmd_traj->parsed()) {
            const auto cfg =
                load(config_path, fracsis::RunKind::kTrajectories, out_override);
            const auto summary = fracsis::run_trajectory_scenarios(cfg, opts);
            if (!quiet)
                for (const auto& s : summary)
                    std::cout << "x0=" << fracsis::format_compact(s.x0)
                              << (s.controlled ? " controlled  " : " uncontrolled")
                              << "  final=" << s.final_state
                              << "  cost=" << s.total_cost << "\n";
        } else if (cmd_conv->parsed()) {
            const auto cfg = load(config_path, fracsis::RunKind::kConverge, out_override);
            const auto report = fracsis::run_convergence_study(cfg, opts);
            if (!quiet) {
                for (const auto& lvl : report.levels)
                    std::cout << "dx=" << lvl.dx << "  n_t=" << lvl.n_t
                              << "  linf=" << lvl.linf << "  l2=" << lvl.l2 << "\n";
                std::cout << "orders: linf=" << report.linf_order
                          << "  l2=" << report.l2_order << "\n";
            }
        } else if (cmd_sweep->parsed()) {
            const auto cfg = load(config_path, fracsis::RunKind::kSweep, out_override);
            const auto table = fracsis::run_alpha_sweep(cfg, opts);
            if (!quiet)
                for (const auto& c : table)
                    std::cout << "alpha=" << c.alpha << "  domain=" << c.domain
                              << "  u_norm=" << c.u_norm << "  du_norm=" << c.du_norm
                              << "\n";
        } else if (cmd_stat->parsed()) {
            const auto cfg = load(config_path, fracsis::RunKind::kStationary, out_override);
            fracsis::run_stationary(cfg, opts);
            if (!quiet) std::cout << "stationary profile written to "
                                  << cfg.out_dir.string() << "\n";
        }
    } catch (const fracsis::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fracsis::NumericalBlowup& e) {
        std::cerr << "numerical blow-up: " << e.what() << "\n";
        return kExitBlowup;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
