// Times the OpenMP kernels against their serial reference implementations and
// double-checks the determinism contract while doing so:
//   - simulate_investor must be bit-identical for every workers value
//   - sweep must be bit-identical to sweep_serial
//
//   ./zsl_bench [n_rounds] [seed]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "zsl/breakeven.hpp"
#include "zsl/monte_carlo.hpp"

namespace {

template <typename F>
double seconds(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool identical(const zsl::SimulationResult& a, const zsl::SimulationResult& b) {
    return a.mean_payoff == b.mean_payoff && a.win_total == b.win_total &&
           a.loss_total == b.loss_total && a.std_error == b.std_error;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t n_rounds = 8'000'000;
    std::uint64_t seed = 42;
    if (argc > 1) n_rounds = std::stoull(argv[1]);
    if (argc > 2) seed = std::stoull(argv[2]);

    zsl::SimulationConfig config;
    config.n_rounds = n_rounds;
    config.params = zsl::GaussianParams{0.0, 0.25};
    config.spec.interest = 0.2;
    config.seed = seed;

    std::printf("monte carlo kernel: n=%llu rounds, I=0.2, mu=0, sigma=0.25, seed=%llu\n",
                static_cast<unsigned long long>(n_rounds),
                static_cast<unsigned long long>(seed));

    zsl::SimulationResult serial_result;
    const double t_serial = seconds([&] { serial_result = simulate_investor_serial(config); });
    std::printf("  %-18s %8.3f s    mean=% .8f\n", "serial reference", t_serial,
                serial_result.mean_payoff);

    zsl::SimulationResult baseline;
    bool have_baseline = false;
    for (int workers : {1, 2, 4, 8, 16, 24}) {
        config.workers = workers;
        zsl::SimulationResult result;
        const double t = seconds([&] { result = simulate_investor(config); });
        if (!have_baseline) {
            baseline = result;
            have_baseline = true;
        }
        const bool stable = identical(result, baseline);
        const bool close = std::abs(result.mean_payoff - serial_result.mean_payoff) <
                           16.0 * 1e-15 * static_cast<double>(n_rounds) + 1e-12;
        std::printf("  parallel w=%-6d %8.3f s    speedup %5.2fx   stable=%s  near-serial=%s\n",
                    workers, t, t_serial / t, stable ? "yes" : "NO",
                    close ? "yes" : "NO");
        if (!stable) return 1;
    }

    std::vector<double> mu_values;
    for (int k = 0; k <= 10; ++k) mu_values.push_back(0.01 * k);
    std::vector<double> i_values;
    for (int k = 1; k <= 160; ++k) i_values.push_back(0.01 * k);

    std::printf("expected-return sweep: %zu x %zu grid\n", mu_values.size(), i_values.size());
    zsl::SweepGrid grid_serial;
    const double t_sweep_serial =
        seconds([&] { grid_serial = zsl::sweep_serial(mu_values, i_values, 0.25); });
    std::printf("  %-18s %8.3f s\n", "serial reference", t_sweep_serial);

    zsl::SweepGrid grid_parallel;
    const double t_sweep =
        seconds([&] { grid_parallel = zsl::sweep(mu_values, i_values, 0.25); });
    const bool grids_match =
        grid_serial.cells.size() == grid_parallel.cells.size() &&
        std::memcmp(grid_serial.cells.data(), grid_parallel.cells.data(),
                    grid_serial.cells.size() * sizeof(double)) == 0;
    std::printf("  %-18s %8.3f s    speedup %5.2fx   bit-identical=%s\n", "parallel",
                t_sweep, t_sweep_serial / t_sweep, grids_match ? "yes" : "NO");

    return grids_match ? 0 : 1;
}
