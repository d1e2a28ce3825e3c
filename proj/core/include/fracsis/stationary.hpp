#pragma once

#include <vector>

#include "fracsis/sis_model.hpp"

namespace fracsis {

// Nondecreasing stationary value profile obtained by integrating
// b(s) + sqrt(b(s)^2 + s^2) from the origin with value phi0 there.
struct StationaryField {
    std::vector<double> x;
    std::vector<double> values;
    double phi0 = 0.0;
};

// Integrand of the stationary profile; nonnegative for all s >= 0.
double stationary_integrand(const ModelParams& p, double s);

// Cumulative trapezoidal quadrature over uniform ascending nodes starting
// at zero.
StationaryField stationary_value(const ModelParams& p, double phi0,
                                 const std::vector<double>& x_nodes);

// Antiderivative of the stationary integrand in closed form, valid for
// alpha = 1 only (inverse-hyperbolic-sine expression).
double closed_form_alpha1(const ModelParams& p, double phi0, double x);

// Discrepancy between two nodal fields. linf is the max absolute
// difference; l2 = sqrt(dx * sum diff^2) is the discrete L2 norm and
// l2_squared its square, the weighting used by the convergence reports.
struct ErrorNorms {
    double linf = 0.0;
    double l2 = 0.0;
    double l2_squared = 0.0;
};

ErrorNorms compare_fields(const std::vector<double>& u,
                          const std::vector<double>& v_bar, double dx);

}  // namespace fracsis
