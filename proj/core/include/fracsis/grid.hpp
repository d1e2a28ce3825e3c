#pragma once

#include <cmath>
#include <vector>

namespace fracsis {

// Uniform space-time grid on [0, x_max] x [0, t_max] with n_x space
// intervals and n_t time intervals.
struct Grid1D {
    double x_max = 0.0;
    double t_max = 0.0;
    int n_x = 0;
    int n_t = 0;

    double dx() const { return x_max / n_x; }
    double dt() const { return t_max / n_t; }
    double node(int i) const { return i * dx(); }
    double time(int n) const { return n * dt(); }

    // Closest time level to t (no temporal interpolation anywhere).
    int nearest_level(double t) const {
        auto n = static_cast<int>(std::llround(t / dt()));
        return n < 0 ? 0 : (n > n_t ? n_t : n);
    }

    std::vector<double> nodes() const {
        std::vector<double> xs(static_cast<std::size_t>(n_x) + 1);
        for (int i = 0; i <= n_x; ++i) xs[static_cast<std::size_t>(i)] = node(i);
        return xs;
    }
};

// Throws BadDimensions unless x_max, t_max > 0, n_x >= 2, n_t >= 1.
Grid1D build_grid(double x_max, double t_max, int n_x, int n_t);

}  // namespace fracsis
