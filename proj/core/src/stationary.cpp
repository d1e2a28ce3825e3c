#include "fracsis/stationary.hpp"

#include <cmath>

#include "fracsis/errors.hpp"

namespace fracsis {

double stationary_integrand(const ModelParams& p, double s) {
    const double b = drift(p, s);
    return b + std::sqrt(b * b + s * s);
}

StationaryField stationary_value(const ModelParams& p, double phi0,
                                 const std::vector<double>& x_nodes) {
    StationaryField field;
    field.x = x_nodes;
    field.phi0 = phi0;
    field.values.resize(x_nodes.size());
    if (x_nodes.empty()) return field;
    field.values[0] = phi0;
    double g_prev = stationary_integrand(p, x_nodes[0]);
    for (std::size_t i = 1; i < x_nodes.size(); ++i) {
        const double g_next = stationary_integrand(p, x_nodes[i]);
        const double h = x_nodes[i] - x_nodes[i - 1];
        field.values[i] = field.values[i - 1] + 0.5 * h * (g_prev + g_next);
        g_prev = g_next;
    }
    return field;
}

double closed_form_alpha1(const ModelParams& p, double phi0, double x) {
    const double net = p.beta - p.gamma;
    const double scale = p.n_pop * p.n_pop / (p.beta * p.beta);
    auto bracket = [&](double y) {
        const double q = std::sqrt(y * y + 1.0);
        return (q * q * q) / 3.0 - 0.5 * net * y * q - 0.5 * net * std::asinh(y);
    };
    const double c0 = scale * (0.5 * std::sqrt(net * net + 1.0) * net * net -
                               std::pow(net * net + 1.0, 1.5) / 3.0 +
                               0.5 * net * std::asinh(net));
    const double y = net - p.beta / p.n_pop * x;
    return phi0 + c0 - p.beta * x * x * x / (3.0 * p.n_pop) + 0.5 * x * x * net +
           scale * bracket(y);
}

ErrorNorms compare_fields(const std::vector<double>& u,
                          const std::vector<double>& v_bar, double dx) {
    if (u.size() != v_bar.size())
        throw LengthMismatch("fields to compare have different lengths");
    ErrorNorms norms;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = std::abs(u[i] - v_bar[i]);
        norms.linf = std::max(norms.linf, d);
        sum_sq += d * d;
    }
    norms.l2_squared = dx * sum_sq;
    norms.l2 = std::sqrt(norms.l2_squared);
    return norms;
}

}  // namespace fracsis
