#pragma once

#include <map>
#include <vector>

#include "fracsis/exit_cost.hpp"
#include "fracsis/grid.hpp"
#include "fracsis/sis_model.hpp"

namespace fracsis {

// Upwind numerical Hamiltonian at a node with drift b and one-sided slopes
// d_left (backward) and d_right (forward):
//   (-b + d_left/2)^+ d_left + (-b + d_right/2)^- d_right - x^2/2.
// The gradient-independent source -x^2/2 needs no upwinding and enters
// verbatim.
double numerical_hamiltonian(double x, double b, double d_left, double d_right);

// Value-function samples over a grid, marched in time from U^0 = phi.
// The left boundary stays pinned at phi(0); the right boundary update uses
// only the backward slope. Snapshots are stored per time level on request.
struct ValueField {
    Grid1D grid;
    double phi0 = 0.0;
    std::vector<double> values;       // current level, n_x + 1 entries
    int step_index = 0;               // current time level n
    std::vector<double> drift_nodes;  // b at grid nodes, fixed per march
    std::map<int, std::vector<double>> snapshots;
};

ValueField make_value_field(const ModelParams& p, const Grid1D& grid,
                            const ExitCostSpec& cost);

// Advances one time level in place. Throws NumericalBlowup when the new
// level exceeds the 1e6 sentinel or stops being finite.
void step(ValueField& field);

// Ratio dt * (max characteristic speed) / dx for the current level, with
// speed |-b + s| at each node and s the larger one-sided slope magnitude.
// Ratios above one signal instability of the explicit march.
double cfl_number(const ValueField& field);

struct SolveOptions {
    std::vector<double> snapshot_times;
    bool keep_history = false;
    double stabilization_tol = 1e-8;
};

struct SolveReport {
    double max_cfl = 0.0;
    int max_cfl_step = 0;
    double final_sup_diff = 0.0;  // max_i |U^{n_t} - U^{n_t - 1}|
    int stabilized_step = -1;     // first level with sup-diff below tol
    double min_value = 0.0;       // min over all levels and nodes
};

struct Solution {
    ValueField field;  // state after the full march
    SolveReport report;
    std::vector<std::vector<double>> history;  // levels 0..n_t if requested
};

Solution solve(const ModelParams& p, const Grid1D& grid,
               const ExitCostSpec& cost, const SolveOptions& options = {});

}  // namespace fracsis
