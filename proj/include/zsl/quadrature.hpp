#pragma once

#include <functional>

namespace zsl {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_subdivisions = 60;  // levels of adaptive refinement

    // Throws std::domain_error when invalid.
    void validate() const;
};

// Adaptive Simpson integration of f over [a, b] with an absolute-error
// stopping rule. Deterministic for identical inputs. Throws NumericalError
// (carrying the best estimate and the achieved bound) when the subdivision
// budget runs out before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& q = {});

}  // namespace zsl
