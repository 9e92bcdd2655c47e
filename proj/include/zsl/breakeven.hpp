#pragma once

#include <cstddef>
#include <vector>

#include "zsl/gaussian_model.hpp"

namespace zsl {

struct BreakevenRequest {
    GaussianParams params{};
    double i_max = 2.0;  // upper search bound on the interest fraction
    double tol = 1e-6;   // root tolerance on I
    QuadratureConfig quadrature{};

    void validate() const;
};

// Smallest interest fraction with zero expected return. Bracketed bisection
// with secant acceleration; tolerance is on I. Throws NoBreakEvenError when
// the expected return stays negative over the whole bracket.
double solve_breakeven(const BreakevenRequest& req);

// Expected-return surface over a (mu, interest) grid; row r is mu_values[r].
struct SweepGrid {
    std::vector<double> mu_values;
    std::vector<double> i_values;
    double sigma = 0.25;
    std::vector<double> cells;  // row-major, |mu_values| x |i_values|

    double at(std::size_t row, std::size_t col) const {
        return cells[row * i_values.size() + col];
    }
};

// Evaluates every cell; cells are independent and the grid is bit-identical
// to sweep_serial regardless of thread count.
SweepGrid sweep(const std::vector<double>& mu_values, const std::vector<double>& i_values,
                double sigma, const QuadratureConfig& q = {});

// Reference implementation: plain loops, no OpenMP. Kept for tests and the
// benchmark.
SweepGrid sweep_serial(const std::vector<double>& mu_values,
                       const std::vector<double>& i_values, double sigma,
                       const QuadratureConfig& q = {});

// Plot-ready curve samples: the outcome density plus, per interest rate, the
// payoff-weighted density payoff(x) * pdf(x) on a shared uniform x grid.
struct PayoffCurves {
    std::vector<double> x;
    std::vector<double> density;
    std::vector<std::pair<double, std::vector<double>>> weighted;  // (interest, values)
};

PayoffCurves payoff_curve_samples(const std::vector<double>& i_list,
                                  const GaussianParams& params, int n_points);

}  // namespace zsl
