#include "zsl/gaussian_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "zsl/errors.hpp"

namespace zsl {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Validation happens once at the public entry points; the kernel skips it in
// the per-point hot path.
struct PdfKernel {
    double mu;
    double inv_sigma;
    double norm;

    explicit PdfKernel(const GaussianParams& params)
        : mu(params.mu),
          inv_sigma(1.0 / params.sigma),
          norm(inv_sigma / std::sqrt(kTwoPi)) {}

    double operator()(double x) const {
        const double z = (x - mu) * inv_sigma;
        return norm * std::exp(-0.5 * z * z);
    }
};

double payoff_kernel(double x, const PayoffSpec& spec) {
    return std::min(std::clamp(x, spec.lower_bound, spec.upper_bound), spec.interest);
}

// Below this, the loss integral is lost in quadrature noise and the win/loss
// ratio carries no information.
double degenerate_floor(const QuadratureConfig& q) { return 10.0 * q.abs_tol; }

double gaussian_mass(const PayoffSpec& spec, const PdfKernel& pdf, const QuadratureConfig& q) {
    return integrate([&](double x) { return pdf(x); }, spec.lower_bound, spec.upper_bound, q);
}

}  // namespace

void GaussianParams::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::domain_error("sigma must be positive and finite");
    }
    if (!(std::abs(mu) < 1.0)) {
        throw std::domain_error("mu must satisfy |mu| < 1, got " + std::to_string(mu));
    }
}

void PayoffSpec::validate() const {
    if (!(interest >= 0.0) || !std::isfinite(interest)) {
        throw std::domain_error("interest must be >= 0 and finite");
    }
    if (!std::isfinite(lower_bound) || !std::isfinite(upper_bound) || !(lower_bound < 0.0) ||
        !(upper_bound > 0.0)) {
        throw std::domain_error("payoff bounds must satisfy lower_bound < 0 < upper_bound");
    }
}

double gaussian_pdf(double x, const GaussianParams& params) {
    params.validate();
    return PdfKernel(params)(x);
}

double investor_payoff_fraction(double x, const PayoffSpec& spec) {
    spec.validate();
    return payoff_kernel(x, spec);
}

double expected_win(const PayoffSpec& spec, const GaussianParams& params,
                    const QuadratureConfig& q) {
    spec.validate();
    params.validate();
    q.validate();
    const PdfKernel pdf(params);
    // Payoff is x on (0, cap) and I beyond; the cap saturates at the upper
    // outcome bound.
    const double cap = std::min(spec.interest, spec.upper_bound);
    double win = 0.0;
    if (cap > 0.0) {
        win += integrate([&](double x) { return x * pdf(x); }, 0.0, cap, q);
    }
    if (cap < spec.upper_bound) {
        win += spec.interest *
               integrate([&](double x) { return pdf(x); }, cap, spec.upper_bound, q);
    }
    if (spec.renormalize) win /= gaussian_mass(spec, pdf, q);
    return win;
}

double expected_loss(const PayoffSpec& spec, const GaussianParams& params,
                     const QuadratureConfig& q) {
    spec.validate();
    params.validate();
    q.validate();
    const PdfKernel pdf(params);
    double loss = -integrate([&](double x) { return x * pdf(x); }, spec.lower_bound, 0.0, q);
    loss = std::max(loss, 0.0);
    if (spec.renormalize) loss /= gaussian_mass(spec, pdf, q);
    return loss;
}

double expected_return_ratio(const PayoffSpec& spec, const GaussianParams& params,
                             const QuadratureConfig& q) {
    const double loss = expected_loss(spec, params, q);
    if (loss <= degenerate_floor(q)) {
        throw DegenerateRegimeError(
            "expected loss " + std::to_string(loss) +
            " is below the resolvable floor; win/loss ratio is undefined here");
    }
    return expected_win(spec, params, q) / loss - 1.0;
}

double expected_net_payoff(const PayoffSpec& spec, const GaussianParams& params,
                           const QuadratureConfig& q) {
    spec.validate();
    params.validate();
    q.validate();
    const PdfKernel pdf(params);
    const auto integrand = [&](double x) { return payoff_kernel(x, spec) * pdf(x); };
    // Split at the payoff kinks {0, cap} so every panel is smooth.
    const double cap = std::min(spec.interest, spec.upper_bound);
    const double breakpoints[4] = {spec.lower_bound, 0.0, cap, spec.upper_bound};
    double net = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (breakpoints[i] < breakpoints[i + 1]) {
            net += integrate(integrand, breakpoints[i], breakpoints[i + 1], q);
        }
    }
    if (spec.renormalize) net /= gaussian_mass(spec, pdf, q);
    return net;
}

}  // namespace zsl
