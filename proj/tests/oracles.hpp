#pragma once

#include <algorithm>
#include <cmath>

// Closed-form normal and truncated-normal moments via the error function.
// Deliberately independent of the library's quadrature path: these are the
// reference values the adaptive integrator is checked against.
namespace oracle {

inline constexpr double kSqrtTwoPi = 2.506628274631000502415765284811;

inline double norm_pdf(double x, double mu, double sigma) {
    const double z = (x - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * kSqrtTwoPi);
}

inline double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Gaussian mass on [a, b].
inline double mass(double a, double b, double mu, double sigma) {
    return norm_cdf((b - mu) / sigma) - norm_cdf((a - mu) / sigma);
}

// Integral of x * pdf(x) over [a, b].
inline double first_moment(double a, double b, double mu, double sigma) {
    return mu * mass(a, b, mu, sigma) +
           sigma * sigma * (norm_pdf(a, mu, sigma) - norm_pdf(b, mu, sigma));
}

inline double expected_win(double interest, double mu, double sigma, double lo = -1.0,
                           double hi = 1.0, bool renormalize = false) {
    const double cap = std::min(interest, hi);
    double win = interest * mass(cap, hi, mu, sigma);
    if (cap > 0.0) win += first_moment(0.0, cap, mu, sigma);
    if (renormalize) win /= mass(lo, hi, mu, sigma);
    return win;
}

inline double expected_loss(double mu, double sigma, double lo = -1.0, double hi = 1.0,
                            bool renormalize = false) {
    double loss = -first_moment(lo, 0.0, mu, sigma);
    if (renormalize) loss /= mass(lo, hi, mu, sigma);
    return loss;
}

inline double expected_return_ratio(double interest, double mu, double sigma) {
    return expected_win(interest, mu, sigma) / expected_loss(mu, sigma) - 1.0;
}

inline double expected_net_payoff(double interest, double mu, double sigma) {
    return expected_win(interest, mu, sigma) - expected_loss(mu, sigma);
}

}  // namespace oracle
