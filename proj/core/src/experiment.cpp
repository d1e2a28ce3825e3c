#include "fracsis/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>

#include "fracsis/csv.hpp"
#include "fracsis/errors.hpp"
#include "fracsis/feedback.hpp"
#include "fracsis/hjb.hpp"

namespace fracsis {

namespace {

constexpr int kMaxDoublings = 32;

struct MarchResult {
    Solution solution;
    int n_t = 0;
};

// Runs the march, doubling n_t until the CFL monitor stays below one for
// the whole evolution (blow-ups count as violations).
MarchResult march_with_cfl_doubling(const ModelParams& p, double x_max, double t_max,
                                    int n_x, int n_t0, const ExitCostSpec& cost,
                                    const SolveOptions& opts = {}) {
    constexpr int kStepCap = 1 << 29;  // a march this long is infeasible anyway
    long long n_t = std::max(n_t0, 1);
    for (int attempt = 0; attempt < kMaxDoublings && n_t <= kStepCap;
         ++attempt, n_t *= 2) {
        try {
            Solution sol = solve(p, build_grid(x_max, t_max, n_x,
                                               static_cast<int>(n_t)),
                                 cost, opts);
            if (sol.report.max_cfl < 1.0) return {std::move(sol), static_cast<int>(n_t)};
        } catch (const NumericalBlowup&) {
            // retry with a finer time step
        }
    }
    throw Error("CFL ratio stayed >= 1 after refining the time step to " +
                std::to_string(n_t) + " levels");
}

void ensure_out_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory " + dir.string());
}

double sup_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

void warn_cfl(const SolveReport& report, const RunnerOptions& opts,
              const std::string& what) {
    if (!opts.quiet && report.max_cfl > 1.0)
        std::cerr << "warning: " << what << ": CFL ratio " << report.max_cfl
                  << " at step " << report.max_cfl_step
                  << " exceeds 1; expect instability\n";
}

double fitted_slope(const std::vector<double>& log_dx,
                    const std::vector<double>& log_err) {
    const double n = static_cast<double>(log_dx.size());
    const double mx = std::accumulate(log_dx.begin(), log_dx.end(), 0.0) / n;
    const double my = std::accumulate(log_err.begin(), log_err.end(), 0.0) / n;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < log_dx.size(); ++i) {
        num += (log_dx[i] - mx) * (log_err[i] - my);
        den += (log_dx[i] - mx) * (log_dx[i] - mx);
    }
    return num / den;
}

}  // namespace

ConvergenceReport run_convergence_study(const ExperimentConfig& cfg,
                                        const RunnerOptions& opts) {
    const ModelParams p = validate_params(cfg.model);
    const double x_max = cfg.grid.x_max;
    const double t_max = cfg.grid.t_max;

    auto run_level = [&](double dx) {
        const auto n_x = static_cast<int>(std::llround(x_max / dx));
        const auto n_t0 = static_cast<int>(
            std::ceil(t_max / (kConvergeDtDxSqRatio * dx * dx)));
        MarchResult m = march_with_cfl_doubling(p, x_max, t_max, n_x, n_t0, cfg.cost);
        const auto& field = m.solution.field;
        const StationaryField oracle =
            stationary_value(p, field.phi0, field.grid.nodes());
        const ErrorNorms norms =
            compare_fields(field.values, oracle.values, field.grid.dx());
        return ConvergenceLevel{dx, m.n_t, m.solution.report.max_cfl, norms.linf,
                                norms.l2_squared};
    };

    std::vector<std::future<ConvergenceLevel>> futures;
    futures.reserve(cfg.dx_levels.size());
    for (double dx : cfg.dx_levels)
        futures.push_back(std::async(std::launch::async, run_level, dx));

    ConvergenceReport report;
    std::vector<double> log_dx, log_linf, log_l2;
    for (auto& f : futures) {
        report.levels.push_back(f.get());
        const auto& lvl = report.levels.back();
        log_dx.push_back(std::log(lvl.dx));
        log_linf.push_back(std::log(lvl.linf));
        log_l2.push_back(std::log(lvl.l2));
    }
    if (report.levels.size() >= 2) {
        report.linf_order = fitted_slope(log_dx, log_linf);
        report.l2_order = fitted_slope(log_dx, log_l2);
    }

    ensure_out_dir(cfg.out_dir);
    std::vector<double> dxs, linfs, l2s;
    for (const auto& lvl : report.levels) {
        dxs.push_back(lvl.dx);
        linfs.push_back(lvl.linf);
        l2s.push_back(lvl.l2);
    }
    write_csv(cfg.out_dir / "report.csv", {"dx", "linf", "l2"},
              {&dxs, &linfs, &l2s});
    if (!opts.quiet)
        std::cerr << "converge: fitted orders linf=" << report.linf_order
                  << " l2=" << report.l2_order << "\n";
    return report;
}

std::vector<SweepCell> run_alpha_sweep(const ExperimentConfig& cfg,
                                       const RunnerOptions& opts) {
    const Grid1D base = cfg.grid;
    std::vector<std::pair<double, double>> cells;
    for (double alpha : cfg.sweep_alphas) {
        ModelParams p = cfg.model;
        p.alpha = alpha;
        validate_params(p);  // reject inadmissible cells before any run
        for (double dom : cfg.sweep_domains) cells.emplace_back(alpha, dom);
    }

    auto run_cell = [&](double alpha, double dom) {
        ModelParams p = cfg.model;
        p.alpha = alpha;
        // n_x grows with the domain (fixed dx); n_t with domain * horizon,
        // then CFL doubling takes over where the drift grows faster.
        const auto n_x = static_cast<int>(std::llround(base.n_x * dom / base.x_max));
        const auto n_t0 = static_cast<int>(
            std::llround(base.n_t * (dom * dom) / (base.t_max * base.x_max)));
        MarchResult m = march_with_cfl_doubling(p, dom, dom, n_x, n_t0, cfg.cost);
        const auto& field = m.solution.field;
        const FeedbackField fb = feedback(field.values, field.grid);
        return SweepCell{alpha, dom, m.n_t, sup_abs(field.values), sup_abs(fb.xi)};
    };

    std::vector<std::future<SweepCell>> futures;
    futures.reserve(cells.size());
    for (auto [alpha, dom] : cells)
        futures.push_back(std::async(std::launch::async, run_cell, alpha, dom));

    std::vector<SweepCell> table;
    for (auto& f : futures) table.push_back(f.get());

    ensure_out_dir(cfg.out_dir);
    std::vector<double> alphas, doms, u_norms, du_norms;
    for (const auto& c : table) {
        alphas.push_back(c.alpha);
        doms.push_back(c.domain);
        u_norms.push_back(c.u_norm);
        du_norms.push_back(c.du_norm);
    }
    write_csv(cfg.out_dir / "sweep.csv", {"alpha", "domain", "u_norm", "du_norm"},
              {&alphas, &doms, &u_norms, &du_norms});
    if (!opts.quiet)
        std::cerr << "sweep: " << table.size() << " cells written\n";
    return table;
}

std::vector<TrajectoryScenario> run_trajectory_scenarios(const ExperimentConfig& cfg,
                                                         const RunnerOptions& opts) {
    const ModelParams p = validate_params(cfg.model);
    const Grid1D grid = build_grid(cfg.grid.x_max, cfg.grid.t_max, cfg.grid.n_x,
                                   cfg.grid.n_t);
    SolveOptions solve_opts;
    solve_opts.keep_history = true;
    const Solution sol = solve(p, grid, cfg.cost, solve_opts);
    warn_cfl(sol.report, opts, "trajectories");

    ensure_out_dir(cfg.out_dir);
    std::vector<TrajectoryScenario> summary;
    for (double x0 : cfg.initial_states) {
        for (bool controlled : {true, false}) {
            TrajectoryOptions traj_opts;
            traj_opts.pairing = cfg.pairing;
            traj_opts.controlled = controlled;
            TrajectoryRecord traj = euler_trajectory(p, sol, x0, traj_opts);
            traj.terminal_cost = exit_cost_eval(cfg.cost, traj.states.back());
            traj.total_cost = trajectory_cost(traj, cfg.cost);

            const std::string stem = "traj_x" + format_compact(x0) +
                                     (controlled ? "_controlled" : "_uncontrolled");
            write_csv(cfg.out_dir / (stem + ".csv"),
                      {"t", "y", "xi", "running_cost"},
                      {&traj.times, &traj.states, &traj.controls, &traj.running_cost});
            write_key_values(
                cfg.out_dir / (stem + ".meta"),
                {{"total_cost", format_double(traj.total_cost)},
                 {"terminal_cost", format_double(traj.terminal_cost)},
                 {"final_state", format_double(traj.states.back())},
                 {"max_abs_control", format_double(sup_abs(traj.controls))},
                 {"clamp_events", std::to_string(traj.clamp_events)}});

            summary.push_back({x0, controlled, traj.states.back(), traj.total_cost,
                               sup_abs(traj.controls), traj.clamp_events});
        }
    }

    std::vector<double> x0s, flags, finals, costs, maxxi;
    for (const auto& s : summary) {
        x0s.push_back(s.x0);
        flags.push_back(s.controlled ? 1.0 : 0.0);
        finals.push_back(s.final_state);
        costs.push_back(s.total_cost);
        maxxi.push_back(s.max_abs_control);
    }
    write_csv(cfg.out_dir / "scenarios.csv",
              {"x0", "controlled", "final_state", "total_cost", "max_abs_xi"},
              {&x0s, &flags, &finals, &costs, &maxxi});
    return summary;
}

KinkDiagnostic locate_kink(const std::vector<double>& level_values,
                           const Grid1D& grid, double time) {
    if (level_values.size() < 3) throw LengthMismatch("kink locator needs 3 nodes");
    const double dx = grid.dx();
    std::vector<double> second(level_values.size() - 2);
    for (std::size_t i = 1; i + 1 < level_values.size(); ++i)
        second[i - 1] = std::abs(level_values[i + 1] - 2.0 * level_values[i] +
                                 level_values[i - 1]) /
                        (dx * dx);
    const auto arg = static_cast<std::size_t>(
        std::max_element(second.begin(), second.end()) - second.begin());
    std::vector<double> sorted = second;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    return {time, grid.node(static_cast<int>(arg) + 1), second[arg],
            sorted[sorted.size() / 2]};
}

void run_profiles(const ExperimentConfig& cfg, const RunnerOptions& opts) {
    const ModelParams p = validate_params(cfg.model);
    const Grid1D grid = build_grid(cfg.grid.x_max, cfg.grid.t_max, cfg.grid.n_x,
                                   cfg.grid.n_t);
    SolveOptions solve_opts;
    solve_opts.snapshot_times = cfg.snapshot_times;
    if (solve_opts.snapshot_times.empty())
        solve_opts.snapshot_times = {grid.t_max};
    const Solution sol = solve(p, grid, cfg.cost, solve_opts);
    warn_cfl(sol.report, opts, "profiles");

    ensure_out_dir(cfg.out_dir);
    const auto xs = grid.nodes();
    std::vector<KinkDiagnostic> kinks;
    std::ofstream plot(cfg.out_dir / "plot.gp");
    plot << "set datafile separator ','\nset key autotitle columnhead\n";
    for (double t : solve_opts.snapshot_times) {
        const int level = grid.nearest_level(t);
        const auto& values = sol.field.snapshots.at(level);
        const std::string tag = format_compact(t);
        write_csv(cfg.out_dir / ("u_t" + tag + ".csv"), {"x", "u"}, {&xs, &values});
        const FeedbackField fb = feedback(values, grid);
        write_csv(cfg.out_dir / ("xi_t" + tag + ".csv"), {"x", "xi"}, {&xs, &fb.xi});
        plot << "plot 'u_t" << tag << ".csv' using 1:2 with lines, 'xi_t" << tag
             << ".csv' using 1:2 with lines\npause -1\n";
        if (cfg.cost.variant == ExitCostSpec::Variant::kKinked)
            kinks.push_back(locate_kink(values, grid, t));
    }
    if (!kinks.empty()) {
        std::vector<double> ts, locs, maxs, medians;
        for (const auto& k : kinks) {
            ts.push_back(k.time);
            locs.push_back(k.x);
            maxs.push_back(k.max_second_diff);
            medians.push_back(k.median_second_diff);
        }
        write_csv(cfg.out_dir / "kink.csv",
                  {"t", "x_kink", "max_second_diff", "median_second_diff"},
                  {&ts, &locs, &maxs, &medians});
    }
}

StationaryField run_stationary(const ExperimentConfig& cfg, const RunnerOptions&) {
    const ModelParams p = validate_params(cfg.model);
    const Grid1D grid = build_grid(cfg.grid.x_max, cfg.grid.t_max, cfg.grid.n_x,
                                   cfg.grid.n_t);
    const auto xs = grid.nodes();
    check_exit_cost_minimal_at_origin(cfg.cost, xs);
    const StationaryField field =
        stationary_value(p, exit_cost_eval(cfg.cost, 0.0), xs);
    ensure_out_dir(cfg.out_dir);
    write_csv(cfg.out_dir / "v_bar.csv", {"x", "v_bar"}, {&field.x, &field.values});
    return field;
}

}  // namespace fracsis
