#pragma once

#include <filesystem>
#include <vector>

#include "fracsis/config.hpp"
#include "fracsis/stationary.hpp"

namespace fracsis {

struct ConvergenceLevel {
    double dx = 0.0;
    int n_t = 0;
    double max_cfl = 0.0;
    double linf = 0.0;
    double l2 = 0.0;  // integral of the squared difference (see README)
};

struct ConvergenceReport {
    std::vector<ConvergenceLevel> levels;  // strictly decreasing dx
    double linf_order = 0.0;               // least-squares log-log slopes
    double l2_order = 0.0;
};

struct SweepCell {
    double alpha = 0.0;
    double domain = 0.0;  // x_max = t_max
    int n_t = 0;
    double u_norm = 0.0;   // sup |U| at the final time
    double du_norm = 0.0;  // sup of the merged one-sided gradient
};

struct TrajectoryScenario {
    double x0 = 0.0;
    bool controlled = true;
    double final_state = 0.0;
    double total_cost = 0.0;
    double max_abs_control = 0.0;
    int clamp_events = 0;
};

struct RunnerOptions {
    bool quiet = false;
};

// Initial dt/dx^2 for refinement levels, taken from the reference
// 4/5/200/4000 march; n_t is then doubled until the CFL monitor stays
// below one for the whole march.
inline constexpr double kConvergeDtDxSqRatio = 3.125;

ConvergenceReport run_convergence_study(const ExperimentConfig& cfg,
                                        const RunnerOptions& opts = {});

std::vector<SweepCell> run_alpha_sweep(const ExperimentConfig& cfg,
                                       const RunnerOptions& opts = {});

std::vector<TrajectoryScenario> run_trajectory_scenarios(const ExperimentConfig& cfg,
                                                         const RunnerOptions& opts = {});

void run_profiles(const ExperimentConfig& cfg, const RunnerOptions& opts = {});

StationaryField run_stationary(const ExperimentConfig& cfg,
                               const RunnerOptions& opts = {});

// Per-snapshot location of the strongest curvature spike, used to track
// kinks moving through the domain.
struct KinkDiagnostic {
    double time = 0.0;
    double x = 0.0;
    double max_second_diff = 0.0;
    double median_second_diff = 0.0;
};

KinkDiagnostic locate_kink(const std::vector<double>& level_values,
                           const Grid1D& grid, double time);

}  // namespace fracsis
