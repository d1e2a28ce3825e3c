#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fracsis/errors.hpp"
#include "fracsis/grid.hpp"
#include "fracsis/hjb.hpp"
#include "fracsis/stationary.hpp"

using namespace fracsis;

namespace {

ModelParams params(double alpha, double beta) {
    return validate_params({alpha, beta, 1.0, 2.25, 1.0});
}

std::vector<double> uniform_nodes(double x_max, int n) {
    return build_grid(x_max, 1.0, n, 1).nodes();
}

}  // namespace

TEST_SUITE("stationary") {

TEST_CASE("integrand point values") {
    const auto p = params(1.0, 1.5);
    CHECK(stationary_integrand(p, 0.0) == 0.0);
    CHECK(stationary_integrand(p, 0.75) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("integrand bounds where the drift is negative") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> beyond(0.76, 4.5);
    const auto p = params(0.5, 1.5);
    for (int k = 0; k < 300; ++k) {
        const double s = beyond(rng);
        REQUIRE(drift(p, s) < 0.0);
        const double g = stationary_integrand(p, s);
        CHECK(g > 0.0);
        CHECK(g < s);  // sqrt(b^2 + s^2) < |b| + s
    }
}

TEST_CASE("single node field") {
    const auto field = stationary_value(params(1.0, 1.5), 0.25, {0.0});
    REQUIRE(field.values.size() == 1);
    CHECK(field.values[0] == 0.25);
}

TEST_CASE("profile is nondecreasing") {
    for (double alpha : {0.25, 1.0})
        for (double beta : {0.5, 1.5}) {
            const auto field =
                stationary_value(params(alpha, beta), 0.0, uniform_nodes(10.0, 500));
            for (std::size_t i = 1; i < field.values.size(); ++i)
                CHECK(field.values[i] >= field.values[i - 1]);
        }
}

TEST_CASE("quadrature self-convergence is second order") {
    const auto p = params(0.5, 1.5);
    const auto coarse = stationary_value(p, 0.0, uniform_nodes(10.0, 250));
    const auto mid = stationary_value(p, 0.0, uniform_nodes(10.0, 500));
    const auto fine = stationary_value(p, 0.0, uniform_nodes(10.0, 1000));
    double d1 = 0.0, d2 = 0.0;
    for (std::size_t i = 0; i < coarse.values.size(); ++i) {
        d1 = std::max(d1, std::abs(coarse.values[i] - mid.values[2 * i]));
        d2 = std::max(d2, std::abs(mid.values[2 * i] - fine.values[4 * i]));
    }
    const double richardson = d1 / d2;
    CHECK(richardson > 3.5);
    CHECK(richardson < 4.5);
}

TEST_CASE("closed form pins the origin and differentiates to the integrand") {
    const auto p = params(1.0, 1.5);
    CHECK(std::abs(closed_form_alpha1(p, 0.125, 0.0) - 0.125) < 1e-12);
    const double h = 1e-4;
    const double fd =
        (closed_form_alpha1(p, 0.0, 1.0 + h) - closed_form_alpha1(p, 0.0, 1.0 - h)) /
        (2.0 * h);
    CHECK(std::abs(fd - stationary_integrand(p, 1.0)) < 1e-6);
}

TEST_CASE("closed form agrees with quadrature") {
    for (double beta : {1.5, 0.5}) {
        const auto p = params(1.0, beta);
        const auto field = stationary_value(p, 0.0, uniform_nodes(10.0, 10000));
        // dx = 1e-3; compare at x = 2 and at the far end
        CHECK(std::abs(field.values[2000] - closed_form_alpha1(p, 0.0, 2.0)) <= 1e-6);
        CHECK(std::abs(field.values[10000] - closed_form_alpha1(p, 0.0, 10.0)) <= 1e-6);
    }
}

TEST_CASE("end slope grows with the domain only for fractional orders") {
    auto end_slope = [](const ModelParams& p, double x_max) {
        const auto nodes = uniform_nodes(x_max, static_cast<int>(x_max * 100));
        const auto field = stationary_value(p, 0.0, nodes);
        const std::size_t n = field.values.size();
        return (field.values[n - 1] - field.values[n - 2]) /
               (nodes[n - 1] - nodes[n - 2]);
    };
    const auto frac = params(0.5, 1.5);
    CHECK(end_slope(frac, 20.0) > end_slope(frac, 10.0));
    CHECK(end_slope(frac, 40.0) > end_slope(frac, 20.0));
    const auto classical = params(1.0, 1.5);
    const double bound = 1.0;
    CHECK(end_slope(classical, 10.0) < bound);
    CHECK(end_slope(classical, 20.0) < bound);
    CHECK(end_slope(classical, 40.0) < bound);
}

TEST_CASE("marched solution approaches the profile on a fixed window") {
    // error to the stationary profile over x in [0, 5], measured on matched
    // grids, shrinks as the horizon grows
    const double dx = 0.05;
    const int n_x = 200;  // x_max = 10
    for (double alpha : {0.5, 1.0}) {
        const auto p = params(alpha, 1.5);
        const auto oracle =
            stationary_value(p, exit_cost_eval(ExitCostSpec::bump(), 0.0),
                             build_grid(10.0, 1.0, n_x, 1).nodes());
        auto window_error = [&](double t_max) {
            const auto n_t = static_cast<int>(std::llround(t_max / 5e-4));
            const auto sol =
                solve(p, build_grid(10.0, t_max, n_x, n_t), ExitCostSpec::bump(), {});
            double worst = 0.0;
            for (int i = 0; i <= n_x / 2; ++i)  // nodes up to x = 5
                worst = std::max(worst, std::abs(sol.field.values[i] -
                                                 oracle.values[i]));
            return worst;
        };
        const double e1 = window_error(2.5);
        const double e2 = window_error(5.0);
        const double e3 = window_error(10.0);
        CHECK(e1 >= e2);
        CHECK(e2 >= e3);
        CHECK(e3 < 0.12);  // the refinement-study magnitude at this spacing
    }
}

TEST_CASE("field comparison norms") {
    const std::vector<double> u = {0.0, 1.0, 2.0};
    CHECK(compare_fields(u, u, 0.5).linf == 0.0);
    CHECK(compare_fields(u, u, 0.5).l2 == 0.0);

    const std::vector<double> v = {0.0, 0.5, 2.5};
    const auto norms = compare_fields(u, v, 0.5);
    CHECK(norms.linf == doctest::Approx(0.5));
    CHECK(norms.l2_squared == doctest::Approx(0.5 * (0.25 + 0.25)));
    CHECK(norms.l2 == doctest::Approx(std::sqrt(0.25)));

    CHECK_THROWS_AS(compare_fields(u, {0.0, 1.0}, 0.5), LengthMismatch);
}

}  // TEST_SUITE
