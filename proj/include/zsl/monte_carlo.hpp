#pragma once

#include <cstdint>

#include "zsl/discrete_game.hpp"
#include "zsl/gaussian_model.hpp"
#include "zsl/rng.hpp"

namespace zsl {

struct SimulationConfig {
    std::uint64_t n_rounds = 1'000'000;
    GaussianParams params{};
    PayoffSpec spec{};
    std::uint64_t seed = 0;
    int workers = 0;  // parallelism hint; 0 = library default. Never affects the numbers.

    void validate() const;
};

struct SimulationResult {
    double mean_payoff = 0.0;
    double win_total = 0.0;
    double loss_total = 0.0;
    double ratio_estimate = 0.0;  // win_total / loss_total - 1; NaN when loss_total == 0
    double std_error = 0.0;       // standard error of mean_payoff
    std::uint64_t n_rounds = 0;
    std::uint64_t seed = 0;
};

// One truncated-Gaussian outcome in [lo, hi], drawn by rejection so the
// distribution matches the analytic integrals (no atoms at the bounds).
// Throws RejectionBudgetError when the acceptance probability is negligible.
double sample_outcome(SplitMix64& rng, const GaussianParams& params, double lo = -1.0,
                      double hi = 1.0);

// Monte Carlo estimate of the capped-payoff expectation. Deterministic for a
// fixed (seed, n_rounds) regardless of the workers hint: replicate i draws
// from substream(seed, i) and partial results merge in a fixed order.
SimulationResult simulate_investor(const SimulationConfig& config);

// Reference implementation: one sequential accumulation pass. Kept for tests
// and the benchmark; agrees with simulate_investor up to summation rounding.
SimulationResult simulate_investor_serial(const SimulationConfig& config);

// Same engine over the discrete coin game: b_end uniform on {0..total_pot},
// payoff in coins.
SimulationResult simulate_discrete(const DiscreteGameConfig& config, std::uint64_t n_rounds,
                                   std::uint64_t seed, int workers = 0);

SimulationResult simulate_discrete_serial(const DiscreteGameConfig& config,
                                          std::uint64_t n_rounds, std::uint64_t seed);

}  // namespace zsl
