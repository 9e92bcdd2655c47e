#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "zsl/breakeven.hpp"
#include "zsl/discrete_game.hpp"
#include "zsl/monte_carlo.hpp"

namespace zsl {

// Shortest decimal that round-trips back to the same double.
std::string format_double(double v);

// --- discrete game ---------------------------------------------------------

// CSV mirroring the coin-game table column order, totals row last.
void write_discrete_csv(std::ostream& os, const EnumerationSummary& summary);

// Human-readable table for the terminal.
void write_discrete_table(std::ostream& os, const EnumerationSummary& summary);

nlohmann::ordered_json discrete_json(const EnumerationSummary& summary);

// --- analytic / breakeven ---------------------------------------------------

struct AnalyticReport {
    double expected_win = 0.0;
    double expected_loss = 0.0;
    double expected_return_ratio = 0.0;
    double expected_net_payoff = 0.0;
};

AnalyticReport evaluate_analytic(const PayoffSpec& spec, const GaussianParams& params,
                                 const QuadratureConfig& q = {});

nlohmann::ordered_json analytic_json(const PayoffSpec& spec, const GaussianParams& params,
                                     const AnalyticReport& report);

nlohmann::ordered_json breakeven_json(const BreakevenRequest& req, double interest);

// --- sweep / curves ---------------------------------------------------------

// Long-form rows: mu,interest,sigma,expected_return.
void write_sweep_csv(std::ostream& os, const SweepGrid& grid);

nlohmann::ordered_json sweep_json(const SweepGrid& grid);

struct CurveRow {
    double mu, sigma, interest, x, density, weighted_payoff;
};

// Tidy rows for one curve family; callers concatenate families before writing.
std::vector<CurveRow> curve_rows(const std::vector<double>& i_list, const GaussianParams& params,
                                 int n_points);

void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows);

// --- simulation -------------------------------------------------------------

// Config echo excludes the workers hint so identical seeds serialize to
// identical bytes whatever the thread count.
nlohmann::ordered_json simulation_json(const std::string& mode, const SimulationResult& result,
                                       const nlohmann::ordered_json& config_echo);

// --- reproduce --------------------------------------------------------------

struct ReproduceConfig {
    std::filesystem::path out_dir;
    QuadratureConfig quadrature{};
};

// Writes every table/figure artifact plus claims.json and manifest.json.
// Returns the process exit code (0 on success); on partial failure the
// manifest records per-artifact status. The manifest is also handed back
// through manifest_out when given.
int run_reproduce(const ReproduceConfig& config, std::ostream& log,
                  nlohmann::ordered_json* manifest_out = nullptr);

// The quantitative headline claims, each with computed value and pass flag.
nlohmann::ordered_json build_claims(const QuadratureConfig& q = {});

}  // namespace zsl
