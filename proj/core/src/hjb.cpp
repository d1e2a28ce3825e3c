#include "fracsis/hjb.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracsis/errors.hpp"

namespace fracsis {

namespace {

constexpr double kBlowupSentinel = 1e6;

// One explicit level: out_i = u_i - dt H#(x_i, DU_i). Interior nodes use
// both one-sided slopes; the last node only the backward one. The left
// boundary is re-pinned by the caller.
void advance_level(const std::vector<double>& u, std::vector<double>& out,
                   const std::vector<double>& b, const Grid1D& grid, double phi0) {
    const int nx = grid.n_x;
    const double dx = grid.dx();
    const double dt = grid.dt();
    for (int i = 1; i < nx; ++i) {
        const double dl = (u[i] - u[i - 1]) / dx;
        const double dr = (u[i + 1] - u[i]) / dx;
        out[i] = u[i] - dt * numerical_hamiltonian(grid.node(i), b[i], dl, dr);
    }
    {
        const double dl = (u[nx] - u[nx - 1]) / dx;
        const double x = grid.node(nx);
        const double h = std::max(-b[nx] + 0.5 * dl, 0.0) * dl - 0.5 * x * x;
        out[nx] = u[nx] - dt * h;
    }
    out[0] = phi0;
}

bool level_ok(const std::vector<double>& u) {
    for (double v : u)
        if (!std::isfinite(v) || std::abs(v) > kBlowupSentinel) return false;
    return true;
}

}  // namespace

double numerical_hamiltonian(double x, double b, double d_left, double d_right) {
    const double left = std::max(-b + 0.5 * d_left, 0.0) * d_left;
    const double right = std::min(-b + 0.5 * d_right, 0.0) * d_right;
    return left + right - 0.5 * x * x;
}

ValueField make_value_field(const ModelParams& p, const Grid1D& grid,
                            const ExitCostSpec& cost) {
    ValueField field;
    field.grid = grid;
    const auto xs = grid.nodes();
    check_exit_cost_minimal_at_origin(cost, xs);
    field.phi0 = exit_cost_eval(cost, 0.0);
    field.values.resize(xs.size());
    field.drift_nodes.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        field.values[i] = exit_cost_eval(cost, xs[i]);
        field.drift_nodes[i] = drift(p, xs[i]);
    }
    return field;
}

void step(ValueField& field) {
    if (field.step_index >= field.grid.n_t)
        throw OutOfRange("march already at the final level");
    std::vector<double> next(field.values.size());
    advance_level(field.values, next, field.drift_nodes, field.grid, field.phi0);
    if (!level_ok(next))
        throw NumericalBlowup("value exceeded sentinel at level " +
                                  std::to_string(field.step_index + 1),
                              field.step_index + 1);
    field.values.swap(next);
    ++field.step_index;
}

double cfl_number(const ValueField& field) {
    const int nx = field.grid.n_x;
    const double dx = field.grid.dx();
    const auto& u = field.values;
    double speed = 0.0;
    for (int i = 0; i <= nx; ++i) {
        const double dl = i > 0 ? std::abs((u[i] - u[i - 1]) / dx) : 0.0;
        const double dr = i < nx ? std::abs((u[i + 1] - u[i]) / dx) : 0.0;
        const double s = i == 0 ? dr : (i == nx ? dl : std::max(dl, dr));
        speed = std::max(speed, std::abs(-field.drift_nodes[i] + 0.5 * s + 0.5 * s));
    }
    return field.grid.dt() / dx * speed;
}

Solution solve(const ModelParams& p, const Grid1D& grid, const ExitCostSpec& cost,
               const SolveOptions& options) {
    Solution sol;
    sol.field = make_value_field(p, grid, cost);
    auto& field = sol.field;

    std::vector<int> snap_levels;
    snap_levels.reserve(options.snapshot_times.size());
    for (double t : options.snapshot_times) {
        if (t < 0.0 || t > grid.t_max)
            throw OutOfRange("snapshot time outside [0, t_max]");
        snap_levels.push_back(grid.nearest_level(t));
    }
    auto store_if_requested = [&](int level) {
        for (std::size_t k = 0; k < snap_levels.size(); ++k)
            if (snap_levels[k] == level) {
                field.snapshots.emplace(level, field.values);
                break;
            }
    };

    if (options.keep_history) {
        sol.history.reserve(grid.n_t + 1);
        sol.history.push_back(field.values);
    }
    store_if_requested(0);
    sol.report.min_value = *std::min_element(field.values.begin(), field.values.end());

    std::vector<double> next(field.values.size());
    for (int n = 0; n < grid.n_t; ++n) {
        const double ratio = cfl_number(field);
        if (ratio > sol.report.max_cfl) {
            sol.report.max_cfl = ratio;
            sol.report.max_cfl_step = n;
        }
        advance_level(field.values, next, field.drift_nodes, grid, field.phi0);
        if (!level_ok(next))
            throw NumericalBlowup(
                "value exceeded sentinel at level " + std::to_string(n + 1), n + 1);

        double sup_diff = 0.0;
        double level_min = next[0];
        for (std::size_t i = 0; i < next.size(); ++i) {
            sup_diff = std::max(sup_diff, std::abs(next[i] - field.values[i]));
            level_min = std::min(level_min, next[i]);
        }
        field.values.swap(next);
        field.step_index = n + 1;
        sol.report.final_sup_diff = sup_diff;
        sol.report.min_value = std::min(sol.report.min_value, level_min);
        if (sol.report.stabilized_step < 0 && sup_diff < options.stabilization_tol)
            sol.report.stabilized_step = field.step_index;

        if (options.keep_history) sol.history.push_back(field.values);
        store_if_requested(field.step_index);
    }
    return sol;
}

}  // namespace fracsis
