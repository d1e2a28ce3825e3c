#include "fracsis/grid.hpp"

#include "fracsis/errors.hpp"

namespace fracsis {

Grid1D build_grid(double x_max, double t_max, int n_x, int n_t) {
    if (!(x_max > 0.0) || !(t_max > 0.0) || n_x < 2 || n_t < 1)
        throw BadDimensions("grid needs x_max, t_max > 0, n_x >= 2, n_t >= 1");
    return Grid1D{x_max, t_max, n_x, n_t};
}

}  // namespace fracsis
