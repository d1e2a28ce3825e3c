#include "fracsis/exit_cost.hpp"

#include <algorithm>
#include <cmath>

#include "fracsis/errors.hpp"

namespace fracsis {

ExitCostSpec ExitCostSpec::table(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size())
        throw LengthMismatch("table exit cost needs matching x and phi lists");
    if (x.size() < 2)
        throw InvalidExitCost("table exit cost needs at least 2 samples");
    if (!std::is_sorted(x.begin(), x.end()))
        throw InvalidExitCost("table exit cost abscissae must be ascending");
    return {Variant::kTable, std::move(x), std::move(y)};
}

double exit_cost_eval(const ExitCostSpec& spec, double x) {
    switch (spec.variant) {
        case ExitCostSpec::Variant::kLinear:
            return x;
        case ExitCostSpec::Variant::kKinked:
            return std::min(2.0 * x + 0.5, 6.0 * x * x);
        case ExitCostSpec::Variant::kBump:
            return x + std::exp(-40.0 * (x - 0.5) * (x - 0.5));
        case ExitCostSpec::Variant::kTable: {
            if (x < spec.table_x.front() || x > spec.table_x.back())
                throw OutOfRange("table exit cost queried outside sampled range");
            auto hi = std::lower_bound(spec.table_x.begin(), spec.table_x.end(), x);
            if (hi == spec.table_x.begin()) return spec.table_y.front();
            const auto j = static_cast<std::size_t>(hi - spec.table_x.begin());
            const double x0 = spec.table_x[j - 1], x1 = spec.table_x[j];
            const double w = (x - x0) / (x1 - x0);
            return (1.0 - w) * spec.table_y[j - 1] + w * spec.table_y[j];
        }
    }
    throw Error("unreachable exit cost variant");
}

void check_exit_cost_minimal_at_origin(const ExitCostSpec& spec,
                                       const std::vector<double>& nodes) {
    const double phi0 = exit_cost_eval(spec, 0.0);
    for (double x : nodes) {
        const double v = exit_cost_eval(spec, x);
        if (v < phi0 || !(v >= 0.0))
            throw InvalidExitCost(
                "exit cost must be nonnegative with its global minimum at x = 0");
    }
}

std::string to_string(ExitCostSpec::Variant v) {
    switch (v) {
        case ExitCostSpec::Variant::kLinear: return "linear";
        case ExitCostSpec::Variant::kKinked: return "kinked";
        case ExitCostSpec::Variant::kBump: return "bump";
        case ExitCostSpec::Variant::kTable: return "table";
    }
    return "?";
}

}  // namespace fracsis
