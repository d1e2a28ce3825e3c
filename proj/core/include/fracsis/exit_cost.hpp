#pragma once

#include <string>
#include <vector>

namespace fracsis {

// Terminal cost phi on the infected count. All built-in variants are
// continuous, nonnegative and minimal at x = 0:
//   linear  phi(x) = x
//   kinked  phi(x) = min(2x + 1/2, 6x^2)
//   bump    phi(x) = x + exp(-40 (x - 1/2)^2)
// The table variant linearly interpolates sampled (x, phi) pairs and is
// only defined inside the sampled range.
struct ExitCostSpec {
    enum class Variant { kLinear, kKinked, kBump, kTable };

    Variant variant = Variant::kLinear;
    std::vector<double> table_x;
    std::vector<double> table_y;

    static ExitCostSpec linear() { return {Variant::kLinear, {}, {}}; }
    static ExitCostSpec kinked() { return {Variant::kKinked, {}, {}}; }
    static ExitCostSpec bump() { return {Variant::kBump, {}, {}}; }
    static ExitCostSpec table(std::vector<double> x, std::vector<double> y);
};

double exit_cost_eval(const ExitCostSpec& spec, double x);

// Verifies phi(0) <= phi(x_i) on the given nodes; throws InvalidExitCost.
void check_exit_cost_minimal_at_origin(const ExitCostSpec& spec,
                                       const std::vector<double>& nodes);

std::string to_string(ExitCostSpec::Variant v);

}  // namespace fracsis
