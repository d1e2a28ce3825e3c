#pragma once

#include <vector>

#include "fracsis/grid.hpp"
#include "fracsis/hjb.hpp"
#include "fracsis/trajectory.hpp"

namespace fracsis {

// Nodal feedback control xi_i = -[(D_L U)_i^+ + (D_R U)_i^-] merged from the
// one-sided slopes of a value level; only the available branch is used at
// the boundary nodes. Queries between nodes interpolate linearly.
struct FeedbackField {
    Grid1D grid;
    std::vector<double> xi;

    double at(double x) const;
};

FeedbackField feedback(const std::vector<double>& level_values, const Grid1D& grid);

// Which value level drives the control at trajectory step n.
// kRemainingHorizon pairs physical time n*dt with the level holding the
// remaining horizon t_max - n*dt (the dynamic-programming pairing, default).
// kSameLevel pairs step n with level n, matching the discrete feedback
// formula of the reference scheme; it reproduces the transient control
// sign structure seen with nonconvex exit costs, at the price of a less
// tight match between realized cost and the value function.
enum class FeedbackPairing { kRemainingHorizon, kSameLevel };

struct TrajectoryOptions {
    FeedbackPairing pairing = FeedbackPairing::kRemainingHorizon;
    bool controlled = true;
};

// Forward Euler integration of y' = b(y) + xi(y) against a solved march
// with full history. States are clamped to [0, x_max]; excursions larger
// than round-off are counted in clamp_events. Throws HistoryMissing when
// the solution lacks per-level history.
TrajectoryRecord euler_trajectory(const ModelParams& p, const Solution& solution,
                                  double x0, const TrajectoryOptions& options = {});

// Trapezoidal quadrature of the running cost plus the exit cost at the
// final state.
double trajectory_cost(const TrajectoryRecord& traj, const ExitCostSpec& spec);

}  // namespace fracsis
