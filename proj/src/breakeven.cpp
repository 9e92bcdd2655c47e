#include "zsl/breakeven.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zsl/errors.hpp"

namespace zsl {

void BreakevenRequest::validate() const {
    params.validate();
    quadrature.validate();
    if (!(i_max > 0.0) || !std::isfinite(i_max)) {
        throw std::domain_error("i_max must be positive and finite");
    }
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::domain_error("tol must be positive and finite");
    }
}

double solve_breakeven(const BreakevenRequest& req) {
    req.validate();
    PayoffSpec spec{};
    const double loss = expected_loss(spec, req.params, req.quadrature);
    if (loss <= 10.0 * req.quadrature.abs_tol) {
        throw DegenerateRegimeError("expected loss " + std::to_string(loss) +
                                    " too small to locate a break-even rate");
    }
    const auto ratio_at = [&](double interest) {
        spec.interest = interest;
        return expected_win(spec, req.params, req.quadrature) / loss - 1.0;
    };

    // ratio(0) = -1 exactly: the win region is empty. Maintain
    // f(lo) < 0 <= f(hi); the returned midpoint is the smallest nonnegative-
    // return rate to within tol.
    double lo = 0.0;
    double flo = -1.0;
    double hi = req.i_max;
    double fhi = ratio_at(hi);
    if (fhi < 0.0) {
        throw NoBreakEvenError("expected return ratio is still " + std::to_string(fhi) +
                               " at i_max = " + std::to_string(hi));
    }

    // Bisection with secant acceleration on alternate steps; the forced
    // bisection keeps the bracket shrinking geometrically.
    for (int iter = 0; hi - lo > req.tol && iter < 200; ++iter) {
        double mid;
        if (iter % 2 == 0 && fhi > flo) {
            mid = lo - flo * (hi - lo) / (fhi - flo);
            const double margin = 0.01 * (hi - lo);
            mid = std::min(std::max(mid, lo + margin), hi - margin);
        } else {
            mid = 0.5 * (lo + hi);
        }
        const double fmid = ratio_at(mid);
        if (fmid >= 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

void validate_grid(const std::vector<double>& mu_values, const std::vector<double>& i_values,
                   double sigma) {
    if (mu_values.empty() || i_values.empty()) {
        throw std::domain_error("sweep grids must be nonempty");
    }
    for (std::size_t k = 0; k + 1 < mu_values.size(); ++k) {
        if (!(mu_values[k] < mu_values[k + 1])) {
            throw std::domain_error("mu_values must be strictly ascending");
        }
    }
    for (std::size_t k = 0; k + 1 < i_values.size(); ++k) {
        if (!(i_values[k] < i_values[k + 1])) {
            throw std::domain_error("i_values must be strictly ascending");
        }
    }
    for (double mu : mu_values) GaussianParams{mu, sigma}.validate();
    for (double i : i_values) PayoffSpec{i}.validate();
}

// One cell; loss is precomputed per row (it does not depend on interest).
// Both sweep variants funnel through here, so their grids are bit-identical.
double cell_value(double mu, double interest, double sigma, double row_loss,
                  const QuadratureConfig& q) {
    PayoffSpec spec{};
    spec.interest = interest;
    if (row_loss <= 10.0 * q.abs_tol) {
        throw DegenerateRegimeError("expected loss too small at mu = " + std::to_string(mu));
    }
    return expected_win(spec, GaussianParams{mu, sigma}, q) / row_loss - 1.0;
}

std::vector<double> row_losses(const std::vector<double>& mu_values, double sigma,
                               const QuadratureConfig& q) {
    std::vector<double> losses(mu_values.size());
    for (std::size_t r = 0; r < mu_values.size(); ++r) {
        losses[r] = expected_loss(PayoffSpec{}, GaussianParams{mu_values[r], sigma}, q);
    }
    return losses;
}

[[noreturn]] void rethrow_with_cell(std::exception_ptr eptr, double mu, double interest) {
    const std::string where =
        "sweep cell (mu=" + std::to_string(mu) + ", interest=" + std::to_string(interest) + "): ";
    try {
        std::rethrow_exception(eptr);
    } catch (const NumericalError& e) {
        throw NumericalError(where + e.what(), e.best_estimate(), e.achieved_error());
    } catch (const DegenerateRegimeError& e) {
        throw DegenerateRegimeError(where + e.what());
    }
}

}  // namespace

SweepGrid sweep_serial(const std::vector<double>& mu_values, const std::vector<double>& i_values,
                       double sigma, const QuadratureConfig& q) {
    q.validate();
    validate_grid(mu_values, i_values, sigma);
    SweepGrid grid{mu_values, i_values, sigma, {}};
    grid.cells.resize(mu_values.size() * i_values.size());
    const std::vector<double> losses = row_losses(mu_values, sigma, q);
    for (std::size_t r = 0; r < mu_values.size(); ++r) {
        for (std::size_t c = 0; c < i_values.size(); ++c) {
            try {
                grid.cells[r * i_values.size() + c] =
                    cell_value(mu_values[r], i_values[c], sigma, losses[r], q);
            } catch (...) {
                rethrow_with_cell(std::current_exception(), mu_values[r], i_values[c]);
            }
        }
    }
    return grid;
}

SweepGrid sweep(const std::vector<double>& mu_values, const std::vector<double>& i_values,
                double sigma, const QuadratureConfig& q) {
    q.validate();
    validate_grid(mu_values, i_values, sigma);
    SweepGrid grid{mu_values, i_values, sigma, {}};
    const std::size_t n_rows = mu_values.size();
    const std::size_t n_cols = i_values.size();
    grid.cells.resize(n_rows * n_cols);
    const std::vector<double> losses = row_losses(mu_values, sigma, q);

    // Cells are independent and each writes its own slot, so any schedule
    // produces the same grid as the serial loop.
    std::vector<std::exception_ptr> errors(grid.cells.size());
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(grid.cells.size()); ++k) {
        if (failed.load(std::memory_order_relaxed)) continue;
        const std::size_t r = static_cast<std::size_t>(k) / n_cols;
        const std::size_t c = static_cast<std::size_t>(k) % n_cols;
        try {
            grid.cells[k] = cell_value(mu_values[r], i_values[c], sigma, losses[r], q);
        } catch (...) {
            errors[k] = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    }
    for (std::size_t k = 0; k < errors.size(); ++k) {
        if (errors[k]) rethrow_with_cell(errors[k], mu_values[k / n_cols], i_values[k % n_cols]);
    }
    return grid;
}

PayoffCurves payoff_curve_samples(const std::vector<double>& i_list, const GaussianParams& params,
                                  int n_points) {
    params.validate();
    if (n_points < 2) throw std::domain_error("n_points must be >= 2");
    for (double i : i_list) PayoffSpec{i}.validate();

    PayoffCurves curves;
    curves.x.resize(static_cast<std::size_t>(n_points));
    curves.density.resize(curves.x.size());
    const double step = 2.0 / (n_points - 1);
    for (int j = 0; j < n_points; ++j) {
        const double x = -1.0 + step * j;
        curves.x[static_cast<std::size_t>(j)] = x;
        curves.density[static_cast<std::size_t>(j)] = gaussian_pdf(x, params);
    }
    for (double interest : i_list) {
        PayoffSpec spec{};
        spec.interest = interest;
        std::vector<double> values(curves.x.size());
        for (std::size_t j = 0; j < curves.x.size(); ++j) {
            values[j] = investor_payoff_fraction(curves.x[j], spec) * curves.density[j];
        }
        curves.weighted.emplace_back(interest, std::move(values));
    }
    return curves;
}

}  // namespace zsl
