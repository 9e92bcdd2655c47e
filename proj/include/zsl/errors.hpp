#pragma once

#include <stdexcept>
#include <string>

namespace zsl {

// Quadrature exhausted its refinement budget before reaching the requested
// tolerance. Carries the best estimate and the error bound actually achieved.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double best_estimate, double achieved_error)
        : std::runtime_error(what),
          best_estimate_(best_estimate),
          achieved_error_(achieved_error) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double best_estimate_;
    double achieved_error_;
};

// Expected loss is numerically indistinguishable from zero, so the win/loss
// ratio is undefined for these parameters.
class DegenerateRegimeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No interest rate inside the search bracket yields a nonnegative expected
// return.
class NoBreakEvenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The truncated-Gaussian rejection sampler ran out of attempts; the
// acceptance region carries negligible probability mass.
class RejectionBudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A report or artifact could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zsl
