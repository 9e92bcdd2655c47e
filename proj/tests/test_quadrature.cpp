#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "zsl/errors.hpp"
#include "zsl/quadrature.hpp"

using zsl::QuadratureConfig;
using zsl::integrate;

TEST_SUITE("quadrature") {

TEST_CASE("polynomials up to cubic are integrated exactly") {
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(integrate([](double x) { return x; }, -1.0, 1.0)) < 1e-14);
    CHECK(integrate([](double x) { return x * x * x; }, 0.0, 1.0) ==
          doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("empty interval integrates to zero") {
    CHECK(integrate([](double x) { return std::exp(x); }, 2.0, 2.0) == 0.0);
}

TEST_CASE("gaussian mass over the outcome range matches the erf oracle") {
    const auto pdf = [](double x) { return oracle::norm_pdf(x, 0.0, 0.25); };
    const double estimate = integrate(pdf, -1.0, 1.0);
    CHECK(std::abs(estimate - oracle::mass(-1.0, 1.0, 0.0, 0.25)) < 1e-9);
    CHECK(std::abs(estimate - 0.999936657516334) < 1e-6);
}

TEST_CASE("absolute tolerance is honored for smooth integrands") {
    const auto f = [](double x) { return std::sin(x); };
    const double truth = 1.0 - std::cos(3.0);
    for (double tol : {1e-6, 1e-10, 1e-12}) {
        QuadratureConfig q;
        q.abs_tol = tol;
        CHECK(std::abs(integrate(f, 0.0, 3.0, q) - truth) <= tol);
    }
}

TEST_CASE("kink at a panel boundary is handled") {
    CHECK(integrate([](double x) { return std::abs(x); }, -1.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identical inputs give identical bits") {
    const auto f = [](double x) { return std::exp(-x * x); };
    const double a = integrate(f, -1.0, 2.0);
    const double b = integrate(f, -1.0, 2.0);
    CHECK(a == b);
}

TEST_CASE("precondition violations are rejected") {
    const auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate(f, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate(f, 0.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, -1.0, 1.0),
                    std::invalid_argument);  // non-finite integrand value at 0
    QuadratureConfig q;
    q.abs_tol = -1.0;
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, q), std::domain_error);
}

TEST_CASE("exhausted budget reports the best estimate and achieved bound") {
    QuadratureConfig q;
    q.abs_tol = 1e-15;
    q.max_subdivisions = 2;
    const auto f = [](double x) { return oracle::norm_pdf(x, 0.0, 0.25); };
    try {
        integrate(f, -1.0, 1.0, q);
        FAIL("expected NumericalError");
    } catch (const zsl::NumericalError& e) {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.achieved_error() > q.abs_tol);
        CHECK(std::abs(e.best_estimate() - oracle::mass(-1.0, 1.0, 0.0, 0.25)) < 1e-2);
    }
}

}  // TEST_SUITE
