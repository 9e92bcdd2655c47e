#include "zsl/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zsl/errors.hpp"

namespace zsl {

void SimulationConfig::validate() const {
    if (n_rounds < 1) throw std::domain_error("n_rounds must be >= 1");
    if (workers < 0) throw std::domain_error("workers must be >= 0");
    params.validate();
    spec.validate();
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kMaxRejectionAttempts = 1 << 20;

// Rounds per replicate chunk. Fixed (never derived from the worker count) so
// the chunk partials, and therefore the merged result, do not depend on how
// many threads ran the loop.
constexpr std::uint64_t kChunkRounds = 1 << 14;

int resolve_workers(int workers) {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

// Single-pass Welford accumulator plus win/loss tallies.
struct Accumulator {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double win = 0.0;
    double loss = 0.0;

    void add(double x) noexcept {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
        if (x >= 0.0) {
            win += x;
        } else {
            loss -= x;
        }
    }
};

// Chan's parallel-variance combination; exact for the counts involved.
Accumulator merge(const Accumulator& a, const Accumulator& b) noexcept {
    if (a.count == 0) return b;
    if (b.count == 0) return a;
    Accumulator out;
    out.count = a.count + b.count;
    const double delta = b.mean - a.mean;
    const double nb_over_n = static_cast<double>(b.count) / static_cast<double>(out.count);
    out.mean = a.mean + delta * nb_over_n;
    out.m2 = a.m2 + b.m2 + delta * delta * static_cast<double>(a.count) * nb_over_n;
    out.win = a.win + b.win;
    out.loss = a.loss + b.loss;
    return out;
}

// Pairwise tree over the chunk-ordered partials; the merge order is a pure
// function of the chunk count.
Accumulator merge_ordered(std::vector<Accumulator> parts) {
    if (parts.empty()) return {};
    while (parts.size() > 1) {
        std::vector<Accumulator> next((parts.size() + 1) / 2);
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] = (2 * i + 1 < parts.size()) ? merge(parts[2 * i], parts[2 * i + 1])
                                                 : parts[2 * i];
        }
        parts = std::move(next);
    }
    return parts[0];
}

SimulationResult finish(const Accumulator& acc, std::uint64_t n_rounds, std::uint64_t seed) {
    SimulationResult result;
    result.mean_payoff = acc.mean;
    result.win_total = acc.win;
    result.loss_total = acc.loss;
    result.ratio_estimate =
        acc.loss > 0.0 ? acc.win / acc.loss - 1.0 : std::numeric_limits<double>::quiet_NaN();
    result.std_error = acc.count > 1
                           ? std::sqrt(acc.m2 / (static_cast<double>(acc.count) *
                                                 static_cast<double>(acc.count - 1)))
                           : 0.0;
    result.n_rounds = n_rounds;
    result.seed = seed;
    return result;
}

// Chunked parallel driver: replicate i always draws from substream(seed, i),
// chunk partials are accumulated in replicate order, and the ordered merge
// makes the result independent of the thread count.
template <typename PerRound>
Accumulator run_chunked(std::uint64_t n_rounds, int workers, const PerRound& per_round) {
    const std::uint64_t n_chunks = (n_rounds + kChunkRounds - 1) / kChunkRounds;
    std::vector<Accumulator> parts(static_cast<std::size_t>(n_chunks));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_chunks));
    std::atomic<bool> failed{false};
    const int n_threads = resolve_workers(workers);
    (void)n_threads;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(n_threads)
#endif
    for (std::ptrdiff_t chunk = 0; chunk < static_cast<std::ptrdiff_t>(n_chunks); ++chunk) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            const std::uint64_t begin = static_cast<std::uint64_t>(chunk) * kChunkRounds;
            const std::uint64_t end = std::min(begin + kChunkRounds, n_rounds);
            Accumulator acc;
            for (std::uint64_t i = begin; i < end; ++i) acc.add(per_round(i));
            parts[static_cast<std::size_t>(chunk)] = acc;
        } catch (...) {
            errors[static_cast<std::size_t>(chunk)] = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    }
    for (const auto& eptr : errors) {
        if (eptr) std::rethrow_exception(eptr);
    }
    return merge_ordered(std::move(parts));
}

template <typename PerRound>
Accumulator run_serial(std::uint64_t n_rounds, const PerRound& per_round) {
    Accumulator acc;
    for (std::uint64_t i = 0; i < n_rounds; ++i) acc.add(per_round(i));
    return acc;
}

double gaussian_payoff_round(std::uint64_t round, const SimulationConfig& config) {
    SplitMix64 rng = SplitMix64::substream(config.seed, round);
    const double x =
        sample_outcome(rng, config.params, config.spec.lower_bound, config.spec.upper_bound);
    return investor_payoff_fraction(x, config.spec);
}

double discrete_payoff_round(std::uint64_t round, const DiscreteGameConfig& config,
                             std::uint64_t seed) {
    SplitMix64 rng = SplitMix64::substream(seed, round);
    const std::uint64_t pot = static_cast<std::uint64_t>(config.total_pot());
    const auto b_end = static_cast<std::int64_t>(rng.next_below(pot + 1));
    const OutcomeRow row = make_outcome_row(b_end, config);
    assert(row.a_recovered + row.b_net + row.c_end == config.total_pot());
    return static_cast<double>(row.a_win - row.a_loss);
}

}  // namespace

double sample_outcome(SplitMix64& rng, const GaussianParams& params, double lo, double hi) {
    params.validate();
    if (!(lo < hi)) throw std::domain_error("sample_outcome: requires lo < hi");
    // Box-Muller candidate, rejected until it lands inside [lo, hi]. Rejection
    // keeps the distribution identical to the truncated density the analytic
    // integrals use; clamping would put atoms at the bounds.
    for (int attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
        const double u1 = 1.0 - rng.next_double();  // (0, 1]
        const double u2 = rng.next_double();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
        const double x = params.mu + params.sigma * z;
        if (x >= lo && x <= hi) return x;
    }
    throw RejectionBudgetError("sample_outcome: no draw in [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "] after " +
                               std::to_string(kMaxRejectionAttempts) + " attempts (mu=" +
                               std::to_string(params.mu) + ", sigma=" +
                               std::to_string(params.sigma) + ")");
}

SimulationResult simulate_investor(const SimulationConfig& config) {
    config.validate();
    const auto per_round = [&](std::uint64_t i) { return gaussian_payoff_round(i, config); };
    return finish(run_chunked(config.n_rounds, config.workers, per_round), config.n_rounds,
                  config.seed);
}

SimulationResult simulate_investor_serial(const SimulationConfig& config) {
    config.validate();
    const auto per_round = [&](std::uint64_t i) { return gaussian_payoff_round(i, config); };
    return finish(run_serial(config.n_rounds, per_round), config.n_rounds, config.seed);
}

SimulationResult simulate_discrete(const DiscreteGameConfig& config, std::uint64_t n_rounds,
                                   std::uint64_t seed, int workers) {
    config.validate();
    if (n_rounds < 1) throw std::domain_error("n_rounds must be >= 1");
    const auto per_round = [&](std::uint64_t i) { return discrete_payoff_round(i, config, seed); };
    return finish(run_chunked(n_rounds, workers, per_round), n_rounds, seed);
}

SimulationResult simulate_discrete_serial(const DiscreteGameConfig& config,
                                          std::uint64_t n_rounds, std::uint64_t seed) {
    config.validate();
    if (n_rounds < 1) throw std::domain_error("n_rounds must be >= 1");
    const auto per_round = [&](std::uint64_t i) { return discrete_payoff_round(i, config, seed); };
    return finish(run_serial(n_rounds, per_round), n_rounds, seed);
}

}  // namespace zsl
