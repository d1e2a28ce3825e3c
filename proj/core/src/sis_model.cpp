#include "fracsis/sis_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fracsis/errors.hpp"

namespace fracsis {

namespace {

// Net per-capita growth times state: (beta - gamma - beta/N x) x, the
// numerator of the drift before fractional rescaling.
double logistic_rate(const ModelParams& p, double x) {
    return (p.beta - p.gamma - p.beta / p.n_pop * x) * x;
}

double drift_denominator(const ModelParams& p, double x) {
    return p.m_alpha -
           (1.0 - p.alpha) * (p.beta - p.gamma - 2.0 * p.beta / p.n_pop * x);
}

constexpr double kClampTol = 1e-12;

}  // namespace

ModelParams validate_params(const ModelParams& raw) {
    if (!(raw.alpha >= 0.0 && raw.alpha <= 1.0))
        throw NonPositiveParameter("alpha must lie in [0, 1], got " +
                                   std::to_string(raw.alpha));
    if (!(raw.beta > 0.0))
        throw NonPositiveParameter("beta must be positive");
    if (!(raw.gamma > 0.0))
        throw NonPositiveParameter("gamma must be positive");
    if (!(raw.n_pop > 0.0))
        throw NonPositiveParameter("n_pop must be positive");
    if (!(raw.m_alpha > 0.0))
        throw NonPositiveParameter("m_alpha must be positive");
    const double lhs = raw.alpha + (1.0 - raw.alpha) * (raw.beta - raw.gamma);
    if (!(lhs <= raw.m_alpha))
        throw ViolatedAdmissibility(
            "admissibility alpha + (1-alpha)(beta-gamma) <= m_alpha fails: " +
            std::to_string(lhs) + " > " + std::to_string(raw.m_alpha));
    if (raw.alpha < 1.0 && !(drift_denominator_root(raw) < 0.0))
        throw ViolatedAdmissibility("drift denominator root is not negative");
    return raw;
}

double drift_denominator_root(const ModelParams& p) {
    if (p.alpha >= 1.0) return -std::numeric_limits<double>::infinity();
    return ((p.beta - p.gamma) * (1.0 - p.alpha) - p.m_alpha) * 2.0 * p.n_pop /
           (p.beta * (1.0 - p.alpha));
}

double drift(const ModelParams& p, double x) {
    if (p.alpha >= 1.0) return logistic_rate(p, x);
    return logistic_rate(p, x) * p.alpha / drift_denominator(p, x);
}

double drift_derivative(const ModelParams& p, double x) {
    const double slope = p.beta - p.gamma - 2.0 * p.beta / p.n_pop * x;
    if (p.alpha >= 1.0) return slope;
    const double den = drift_denominator(p, x);
    return p.alpha * slope / den -
           2.0 * (1.0 - p.alpha) * p.alpha * (p.beta / p.n_pop) * x *
               (p.beta - p.gamma - p.beta / p.n_pop * x) / (den * den);
}

EquilibriumSet equilibria(const ModelParams& p) {
    EquilibriumSet set;
    const bool endemic_exists = p.rho() > 1.0;
    set.disease_free = {0.0, !endemic_exists};
    if (endemic_exists)
        set.endemic = Equilibrium{p.n_pop * (1.0 - 1.0 / p.rho()), true};
    return set;
}

SaturatedParams saturated_params(const ModelParams& p) {
    // Coefficients are forced by matching the saturated right-hand side to
    // the drift: divide numerator and denominator by
    // d0 = m_alpha - (1-alpha)(beta-gamma) > 0.
    const double d0 = p.m_alpha - (1.0 - p.alpha) * (p.beta - p.gamma);
    SaturatedParams s;
    s.lambda_a = p.alpha * p.beta / (p.n_pop * d0);
    s.r_a = p.alpha * p.gamma / d0;
    s.k_a = 2.0 * p.beta * (1.0 - p.alpha) / (p.n_pop * d0);
    return s;
}

double saturated_rhs(const SaturatedParams& s, double n_pop, double x) {
    return (s.lambda_a * (n_pop - x) - s.r_a) * x / (1.0 + s.k_a * x);
}

double logistic_closed_form(const ModelParams& p, double i0, double t) {
    if (p.beta == p.gamma)
        throw DegenerateRate("logistic closed form is singular at beta == gamma");
    const double net = p.beta - p.gamma;
    return p.n_pop * i0 * net /
           (std::exp(-t * net) * (p.n_pop * net - p.beta * i0) + p.beta * i0);
}

TrajectoryRecord integrate_uncontrolled(const ModelParams& p, double i0,
                                        double horizon, double dt) {
    if (!(dt > 0.0)) throw NonPositiveParameter("dt must be positive");
    if (i0 < 0.0) throw NonPositiveParameter("initial state must be nonnegative");
    const auto n_steps = static_cast<int>(std::llround(horizon / dt));

    TrajectoryRecord traj;
    traj.times.reserve(n_steps + 1);
    traj.states.reserve(n_steps + 1);
    double y = i0;
    for (int n = 0; n <= n_steps; ++n) {
        traj.times.push_back(n * dt);
        traj.states.push_back(y);
        traj.controls.push_back(0.0);
        traj.running_cost.push_back(0.5 * y * y);
        if (n == n_steps) break;
        const double k1 = drift(p, y);
        const double k2 = drift(p, y + 0.5 * dt * k1);
        const double k3 = drift(p, y + 0.5 * dt * k2);
        const double k4 = drift(p, y + dt * k3);
        y += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (y < -kClampTol || y > 2.0 * p.n_pop)
            throw StepTooLarge("state " + std::to_string(y) + " left [0, 2N] at t=" +
                               std::to_string((n + 1) * dt));
        if (y < 0.0) y = 0.0;  // round-off only, by the check above
    }
    return traj;
}

std::vector<double> cf_derivative(const std::vector<double>& samples, double dt,
                                  double alpha, double m_alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw OrderOutOfRange("cf_derivative requires 0 <= alpha < 1");
    if (samples.size() < 2)
        throw LengthMismatch("cf_derivative needs at least 2 samples");
    if (!(dt > 0.0)) throw NonPositiveParameter("dt must be positive");

    const std::size_t n = samples.size();
    std::vector<double> fp(n);
    for (std::size_t k = 1; k + 1 < n; ++k)
        fp[k] = (samples[k + 1] - samples[k - 1]) / (2.0 * dt);
    if (n >= 3) {
        // difference-first second-order one-sided stencils; exact zero on
        // constant signals
        fp[0] = (4.0 * (samples[1] - samples[0]) - (samples[2] - samples[0])) /
                (2.0 * dt);
        fp[n - 1] = (4.0 * (samples[n - 1] - samples[n - 2]) -
                     (samples[n - 1] - samples[n - 3])) /
                    (2.0 * dt);
    } else {
        fp[0] = fp[1] = (samples[1] - samples[0]) / dt;
    }

    // Trapezoidal sum of f'(s) exp(-lambda (t_k - s)); the shared kernel
    // factor makes it a one-term recurrence over k.
    const double lambda = alpha / (1.0 - alpha);
    const double decay = std::exp(-lambda * dt);
    std::vector<double> out(n, 0.0);
    double acc = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        acc = decay * (acc + 0.5 * dt * fp[k - 1]) + 0.5 * dt * fp[k];
        out[k] = m_alpha / (1.0 - alpha) * acc;
    }
    return out;
}

}  // namespace fracsis
