#include "fracsis/feedback.hpp"

#include <algorithm>
#include <cmath>

#include "fracsis/errors.hpp"
#include "fracsis/exit_cost.hpp"

namespace fracsis {

namespace {
constexpr double kClampTol = 1e-12;

void feedback_into(const std::vector<double>& u, const Grid1D& grid,
                   std::vector<double>& xi) {
    const int nx = grid.n_x;
    const double dx = grid.dx();
    xi.resize(u.size());
    xi[0] = -std::min((u[1] - u[0]) / dx, 0.0);
    xi[nx] = -std::max((u[nx] - u[nx - 1]) / dx, 0.0);
    for (int i = 1; i < nx; ++i) {
        const double dl = (u[i] - u[i - 1]) / dx;
        const double dr = (u[i + 1] - u[i]) / dx;
        xi[i] = -(std::max(dl, 0.0) + std::min(dr, 0.0));
    }
}

double interp_nodes(const std::vector<double>& vals, const Grid1D& grid, double x) {
    const double dx = grid.dx();
    const double clamped = std::clamp(x, 0.0, grid.x_max);
    auto i = static_cast<int>(clamped / dx);
    i = std::min(i, grid.n_x - 1);
    const double w = (clamped - i * dx) / dx;
    return (1.0 - w) * vals[i] + w * vals[i + 1];
}
}  // namespace

double FeedbackField::at(double x) const { return interp_nodes(xi, grid, x); }

FeedbackField feedback(const std::vector<double>& level_values, const Grid1D& grid) {
    if (level_values.size() != static_cast<std::size_t>(grid.n_x) + 1)
        throw LengthMismatch("value level does not match the grid");
    if (grid.n_x < 1) throw BadDimensions("feedback needs at least 2 nodes");
    FeedbackField field;
    field.grid = grid;
    feedback_into(level_values, grid, field.xi);
    return field;
}

TrajectoryRecord euler_trajectory(const ModelParams& p, const Solution& solution,
                                  double x0, const TrajectoryOptions& options) {
    const Grid1D& grid = solution.field.grid;
    if (solution.history.size() != static_cast<std::size_t>(grid.n_t) + 1)
        throw HistoryMissing("trajectory synthesis needs the full level history");
    if (x0 < 0.0 || x0 > grid.x_max)
        throw OutOfRange("initial state outside [0, x_max]");

    const int nt = grid.n_t;
    const double dt = grid.dt();
    TrajectoryRecord traj;
    traj.times.resize(nt + 1);
    traj.states.resize(nt + 1);
    traj.controls.resize(nt + 1);
    traj.running_cost.resize(nt + 1);

    std::vector<double> xi_nodes;
    double y = x0;
    for (int n = 0; n <= nt; ++n) {
        double xi = 0.0;
        if (options.controlled) {
            const int level =
                options.pairing == FeedbackPairing::kRemainingHorizon ? nt - n : n;
            feedback_into(solution.history[static_cast<std::size_t>(level)], grid,
                          xi_nodes);
            xi = interp_nodes(xi_nodes, grid, y);
        }
        traj.times[n] = n * dt;
        traj.states[n] = y;
        traj.controls[n] = xi;
        traj.running_cost[n] = 0.5 * (y * y + xi * xi);
        if (n == nt) break;
        double next = y + dt * (drift(p, y) + xi);
        if (next < -kClampTol || next > grid.x_max + kClampTol) ++traj.clamp_events;
        y = std::clamp(next, 0.0, grid.x_max);
    }
    return traj;
}

double trajectory_cost(const TrajectoryRecord& traj, const ExitCostSpec& spec) {
    if (traj.times.empty()) throw LengthMismatch("empty trajectory");
    double integral = 0.0;
    for (std::size_t n = 1; n < traj.times.size(); ++n)
        integral += 0.5 * (traj.times[n] - traj.times[n - 1]) *
                    (traj.running_cost[n - 1] + traj.running_cost[n]);
    return integral + exit_cost_eval(spec, traj.states.back());
}

}  // namespace fracsis
