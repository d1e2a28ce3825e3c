#pragma once

#include <optional>
#include <vector>

#include "fracsis/trajectory.hpp"

namespace fracsis {

// Parameters of the reduced infected-population dynamics
//   I' = b(I) = (beta - gamma - beta/n_pop * I) * I
//               * alpha / (m_alpha - (1-alpha)(beta - gamma - 2 beta/n_pop * I)),
// with alpha in [0,1] the derivative order and m_alpha the kernel scaling
// factor. alpha = 1 collapses to the classical logistic rate.
struct ModelParams {
    double alpha = 1.0;
    double beta = 1.5;
    double gamma = 1.0;
    double n_pop = 2.25;
    double m_alpha = 1.0;

    double rho() const { return beta / gamma; }
};

// Checks positivity and the admissibility condition
//   alpha + (1-alpha)(beta - gamma) <= m_alpha,
// which keeps the drift denominator positive on the nonnegative axis.
// Throws NonPositiveParameter or ViolatedAdmissibility.
ModelParams validate_params(const ModelParams& raw);

// Leftmost admissible state: the root of the drift denominator, strictly
// negative for validated parameters with alpha < 1 (-inf for alpha = 1).
double drift_denominator_root(const ModelParams& p);

double drift(const ModelParams& p, double x);
double drift_derivative(const ModelParams& p, double x);

struct Equilibrium {
    double state = 0.0;
    bool stable = false;
};

struct EquilibriumSet {
    Equilibrium disease_free;
    std::optional<Equilibrium> endemic;  // present iff rho > 1
};

EquilibriumSet equilibria(const ModelParams& p);

// Coefficients of the equivalent saturated-incidence form
//   ((lambda_a (n_pop - I) - r_a) I) / (1 + k_a I) == b(I).
struct SaturatedParams {
    double lambda_a = 0.0;
    double r_a = 0.0;
    double k_a = 0.0;  // zero exactly when alpha = 1
};

SaturatedParams saturated_params(const ModelParams& p);

double saturated_rhs(const SaturatedParams& s, double n_pop, double x);

// Explicit solution of the alpha = 1 logistic dynamics. Throws
// DegenerateRate when beta == gamma (the formula is singular there).
double logistic_closed_form(const ModelParams& p, double i0, double t);

// Fixed-step RK4 integration of I' = b(I). States are clamped to zero when
// round-off produces values in (-1e-12, 0); anything outside [0, 2 n_pop]
// aborts with StepTooLarge.
TrajectoryRecord integrate_uncontrolled(const ModelParams& p, double i0,
                                        double horizon, double dt = 1e-3);

// Caputo-Fabrizio derivative of a uniformly sampled series:
//   (m_alpha/(1-alpha)) * integral_0^t f'(s) exp(-alpha/(1-alpha)(t-s)) ds
// by trapezoidal quadrature, with f' from centered differences (one-sided
// second-order stencils at the ends). Requires 0 <= alpha < 1.
std::vector<double> cf_derivative(const std::vector<double>& samples, double dt,
                                  double alpha, double m_alpha);

}  // namespace fracsis
