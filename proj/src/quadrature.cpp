#include "zsl/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zsl/errors.hpp"

namespace zsl {

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
        throw std::domain_error("quadrature abs_tol must be positive and finite");
    }
    if (max_subdivisions < 1) {
        throw std::domain_error("quadrature max_subdivisions must be >= 1");
    }
}

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Recursive refinement with Richardson extrapolation. Each split halves the
// local tolerance, so accepted-panel errors sum to at most the requested
// absolute tolerance. Panels that hit the depth limit are accepted anyway and
// their estimated error is tallied separately.
struct Refiner {
    const std::function<double(double)>& f;
    double spent_err = 0.0;        // |err| of panels accepted within tolerance
    double unconverged_err = 0.0;  // |err| of panels cut off by the depth limit

    double eval(double x) const {
        const double v = f(x);
        if (!std::isfinite(v)) {
            throw std::invalid_argument("integrand not finite at x = " + std::to_string(x));
        }
        return v;
    }

    double refine(double a, double fa, double m, double fm, double b, double fb, double whole,
                  double tol, int depth) {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = simpson(a, m, fa, flm, fm);
        const double right = simpson(m, b, fm, frm, fb);
        const double err = (left + right - whole) / 15.0;
        if (std::abs(err) <= tol) {
            spent_err += std::abs(err);
            return left + right + err;
        }
        if (depth <= 0) {
            unconverged_err += std::abs(err);
            return left + right + err;
        }
        return refine(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
               refine(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
    }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& q) {
    q.validate();
    if (!f) throw std::invalid_argument("integrate: empty integrand");
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("integrate: bounds must be finite");
    }
    if (a > b) throw std::invalid_argument("integrate: requires a <= b");
    if (a == b) return 0.0;

    Refiner refiner{f};
    const double fa = refiner.eval(a);
    const double fb = refiner.eval(b);
    const double m = 0.5 * (a + b);
    const double fm = refiner.eval(m);
    const double whole = simpson(a, b, fa, fm, fb);
    const double result = refiner.refine(a, fa, m, fm, b, fb, whole, q.abs_tol, q.max_subdivisions);

    const double achieved = refiner.spent_err + refiner.unconverged_err;
    if (refiner.unconverged_err > 0.0 && achieved > q.abs_tol) {
        throw NumericalError("integrate: subdivision budget exhausted (achieved error bound " +
                                 std::to_string(achieved) + " > abs_tol " +
                                 std::to_string(q.abs_tol) + ")",
                             result, achieved);
    }
    return result;
}

}  // namespace zsl
