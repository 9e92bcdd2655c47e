#pragma once

#include "zsl/quadrature.hpp"

namespace zsl {

// Transaction-outcome distribution: the borrower's net result per round as a
// fraction of capital risked. mu > 0 tilts the game toward the borrower class.
struct GaussianParams {
    double mu = 0.0;
    double sigma = 0.25;

    void validate() const;  // sigma > 0, |mu| < 1
};

// Investor payoff geometry: full downside exposure, upside capped at the
// simple-interest fraction. Outcomes live in [lower_bound, upper_bound].
// Interest above upper_bound is allowed; the cap simply never binds there.
struct PayoffSpec {
    double interest = 0.2;
    double lower_bound = -1.0;
    double upper_bound = 1.0;
    bool renormalize = false;  // divide integrals by the Gaussian mass inside the bounds

    void validate() const;
};

// Outcome density (the bell curve itself).
double gaussian_pdf(double x, const GaussianParams& params);

// min(clamp(x, lower, upper), interest): losses pass through, wins cap at I.
double investor_payoff_fraction(double x, const PayoffSpec& spec);

// Expected collected interest per round, as a fraction of principal.
double expected_win(const PayoffSpec& spec, const GaussianParams& params,
                    const QuadratureConfig& q = {});

// Expected principal shortfall per round (absolute value of the loss-side
// integral). Does not depend on the interest rate.
double expected_loss(const PayoffSpec& spec, const GaussianParams& params,
                     const QuadratureConfig& q = {});

// expected_win / expected_loss - 1. Negative means the investor class loses
// on average. Throws DegenerateRegimeError when the loss integral cannot be
// resolved above the quadrature tolerance.
double expected_return_ratio(const PayoffSpec& spec, const GaussianParams& params,
                             const QuadratureConfig& q = {});

// Direct expectation of the capped payoff; equals win - loss.
double expected_net_payoff(const PayoffSpec& spec, const GaussianParams& params,
                           const QuadratureConfig& q = {});

}  // namespace zsl
