#pragma once

#include <cstddef>
#include <vector>

namespace fracsis {

// Time series produced by the integrators: state y, applied control xi and
// the running cost (y^2 + xi^2)/2 at every time node. Controls are all zero
// for uncontrolled runs. clamp_events counts projections back into the
// admissible state interval beyond round-off size.
struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<double> states;
    std::vector<double> controls;
    std::vector<double> running_cost;
    double terminal_cost = 0.0;
    double total_cost = 0.0;
    int clamp_events = 0;

    std::size_t size() const { return times.size(); }
};

}  // namespace fracsis
