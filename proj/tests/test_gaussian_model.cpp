#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "zsl/errors.hpp"
#include "zsl/gaussian_model.hpp"
#include "zsl/rng.hpp"

using zsl::GaussianParams;
using zsl::PayoffSpec;
using zsl::QuadratureConfig;

namespace {

PayoffSpec with_interest(double interest) {
    PayoffSpec spec{};
    spec.interest = interest;
    return spec;
}

}  // namespace

TEST_SUITE("gaussian_model") {

TEST_CASE("density values") {
    const GaussianParams params{0.0, 0.25};
    CHECK(std::abs(zsl::gaussian_pdf(0.0, params) - 1.59576912160573) < 1e-12);
    // one-sigma identity
    CHECK(zsl::gaussian_pdf(0.25, params) ==
          doctest::Approx(zsl::gaussian_pdf(0.0, params) * std::exp(-0.5)).epsilon(1e-14));
    // shift invariance
    CHECK(zsl::gaussian_pdf(0.05, GaussianParams{0.05, 0.25}) ==
          zsl::gaussian_pdf(0.0, params));
    CHECK(zsl::gaussian_pdf(0.0, params) > 0.0);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(zsl::gaussian_pdf(0.0, GaussianParams{0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(zsl::gaussian_pdf(0.0, GaussianParams{0.0, -1.0}), std::domain_error);
    CHECK_THROWS_AS(zsl::gaussian_pdf(0.0, GaussianParams{1.0, 0.25}), std::domain_error);
    CHECK_THROWS_AS(zsl::investor_payoff_fraction(0.0, with_interest(-0.1)), std::domain_error);
    PayoffSpec bad{};
    bad.lower_bound = 0.5;
    CHECK_THROWS_AS(zsl::investor_payoff_fraction(0.0, bad), std::domain_error);
}

TEST_CASE("capped payoff geometry") {
    const PayoffSpec spec = with_interest(0.2);
    CHECK(zsl::investor_payoff_fraction(0.5, spec) == 0.2);
    CHECK(zsl::investor_payoff_fraction(-0.3, spec) == -0.3);
    CHECK(zsl::investor_payoff_fraction(-1.4, spec) == -1.0);
    CHECK(zsl::investor_payoff_fraction(0.2, spec) == 0.2);
    CHECK(zsl::investor_payoff_fraction(0.0, spec) == 0.0);
    // cap above the outcome range saturates at the range
    CHECK(zsl::investor_payoff_fraction(1.5, with_interest(2.0)) == 1.0);
}

TEST_CASE("expected win") {
    const GaussianParams params{0.0, 0.25};
    CHECK(std::abs(zsl::expected_win(with_interest(1.0), params) - 0.0997021125439169) < 1e-9);
    CHECK(zsl::expected_win(with_interest(0.0), params) == 0.0);
    CHECK(std::abs(zsl::expected_win(with_interest(0.2), params) - 0.0696774273783002) < 1e-9);
}

TEST_CASE("expected loss") {
    CHECK(std::abs(zsl::expected_loss(with_interest(0.2), GaussianParams{0.0, 0.25}) -
                   0.0997021125439169) < 1e-9);
    CHECK(std::abs(zsl::expected_loss(with_interest(0.2), GaussianParams{0.05, 0.25}) -
                   0.0767095904863308) < 1e-9);
    CHECK(zsl::expected_loss(with_interest(0.2), GaussianParams{0.99, 0.25}) < 1e-3);
}

TEST_CASE("expected return ratio") {
    const GaussianParams fair{0.0, 0.25};
    CHECK(std::abs(zsl::expected_return_ratio(with_interest(1.0), fair)) < 5e-3);
    const double rigged = zsl::expected_return_ratio(with_interest(0.15), GaussianParams{0.05, 0.25});
    CHECK(rigged < 0.0);
    CHECK(std::abs(rigged - -0.0991596085409829) < 1e-6);
    CHECK(std::abs(zsl::expected_return_ratio(with_interest(0.2), fair) - -0.30114392162344) <
          1e-6);
}

TEST_CASE("expected net payoff") {
    const GaussianParams fair{0.0, 0.25};
    CHECK(std::abs(zsl::expected_net_payoff(with_interest(1.0), fair)) < 5e-3);
    CHECK(std::abs(zsl::expected_net_payoff(with_interest(0.2), fair) - -0.0300246851656168) <
          1e-6);
    CHECK(std::abs(zsl::expected_net_payoff(with_interest(0.0), fair) - -0.0997021125439169) <
          1e-6);
}

TEST_CASE("density over the outcome range carries essentially all the mass") {
    for (double mu : {-0.05, 0.0, 0.05}) {
        const GaussianParams params{mu, 0.25};
        const double mass =
            zsl::integrate([&](double x) { return zsl::gaussian_pdf(x, params); }, -1.0, 1.0);
        CHECK(std::abs(mass - 1.0) < 1e-4);
    }
    // At the edge of the supported mu sweep range the truncated tail grows to
    // ~1.65e-4; it stays negligible against every stated tolerance.
    for (double mu : {-0.1, 0.1}) {
        const GaussianParams params{mu, 0.25};
        const double mass =
            zsl::integrate([&](double x) { return zsl::gaussian_pdf(x, params); }, -1.0, 1.0);
        CHECK(std::abs(mass - 1.0) < 2e-4);
    }
}

TEST_CASE("win and ratio are monotone in the interest rate") {
    const GaussianParams params{0.0, 0.25};
    double prev_win = -1.0;
    double prev_ratio = -2.0;
    for (double i = 0.0; i <= 2.0001; i += 0.05) {
        const double win = zsl::expected_win(with_interest(i), params);
        const double ratio = zsl::expected_return_ratio(with_interest(i), params);
        CHECK(win >= prev_win);
        CHECK(ratio >= prev_ratio);
        if (i > 0.05 && i < 1.0) {
            CHECK(win > prev_win);  // strictly increasing inside (0, 1)
            CHECK(ratio > prev_ratio);
        }
        prev_win = win;
        prev_ratio = ratio;
    }
}

TEST_CASE("ratio is monotone in the outcome shift") {
    double prev = -2.0;
    for (double mu : {-0.2, -0.1, 0.0, 0.05, 0.1, 0.2}) {
        const double ratio =
            zsl::expected_return_ratio(with_interest(0.2), GaussianParams{mu, 0.25});
        CHECK(ratio >= prev);
        prev = ratio;
    }
}

TEST_CASE("boundary identities") {
    CHECK(zsl::expected_return_ratio(with_interest(0.0), GaussianParams{0.0, 0.25}) == -1.0);
    CHECK(std::abs(zsl::expected_return_ratio(with_interest(1.0), GaussianParams{0.0, 0.25})) <
          5e-3);
}

TEST_CASE("net payoff equals win minus loss for randomized parameters") {
    zsl::SplitMix64 rng(2024);
    const QuadratureConfig q{};
    for (int trial = 0; trial < 50; ++trial) {
        const double interest = 2.0 * rng.next_double();
        const GaussianParams params{0.2 * rng.next_double() - 0.1,
                                    0.15 + 0.35 * rng.next_double()};
        PayoffSpec spec = with_interest(interest);
        const double net = zsl::expected_net_payoff(spec, params, q);
        const double win = zsl::expected_win(spec, params, q);
        const double loss = zsl::expected_loss(spec, params, q);
        CAPTURE(interest);
        CAPTURE(params.mu);
        CAPTURE(params.sigma);
        CHECK(std::abs(net - (win - loss)) <= 2.0 * q.abs_tol);
        // sign always agrees with the ratio
        const double ratio = zsl::expected_return_ratio(spec, params, q);
        CHECK(((net > 0) == (ratio > 0) || net == 0.0 || ratio == 0.0));
    }
}

TEST_CASE("quadrature agrees with the closed-form oracle to 1e-8") {
    zsl::SplitMix64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const double interest = 0.01 + 1.5 * rng.next_double();
        const double mu = 0.1 * rng.next_double();
        const double sigma = 0.15 + 0.35 * rng.next_double();
        const PayoffSpec spec = with_interest(interest);
        const GaussianParams params{mu, sigma};
        CAPTURE(interest);
        CAPTURE(mu);
        CAPTURE(sigma);
        CHECK(std::abs(zsl::expected_win(spec, params) -
                       oracle::expected_win(interest, mu, sigma)) < 1e-8);
        CHECK(std::abs(zsl::expected_loss(spec, params) - oracle::expected_loss(mu, sigma)) <
              1e-8);
    }
}

TEST_CASE("renormalization divides by the truncated mass and cancels in the ratio") {
    const GaussianParams params{0.05, 0.25};
    PayoffSpec raw = with_interest(0.2);
    PayoffSpec renorm = raw;
    renorm.renormalize = true;
    const double mass = oracle::mass(-1.0, 1.0, 0.05, 0.25);
    CHECK(zsl::expected_win(renorm, params) ==
          doctest::Approx(zsl::expected_win(raw, params) / mass).epsilon(1e-10));
    CHECK(zsl::expected_loss(renorm, params) ==
          doctest::Approx(zsl::expected_loss(raw, params) / mass).epsilon(1e-10));
    CHECK(zsl::expected_return_ratio(renorm, params) ==
          doctest::Approx(zsl::expected_return_ratio(raw, params)).epsilon(1e-9));
}

TEST_CASE("vanishing loss mass is reported as a degenerate regime") {
    CHECK_THROWS_AS(
        zsl::expected_return_ratio(with_interest(0.2), GaussianParams{0.9999, 0.01}),
        zsl::DegenerateRegimeError);
}

}  // TEST_SUITE
