#include "zsl/reporting.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <system_error>

#include "zsl/errors.hpp"
#include "zsl/version.hpp"

namespace zsl {

std::string format_double(double v) {
    std::array<char, 32> buf;
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf.data(), end);
}

// --- discrete game ---------------------------------------------------------

void write_discrete_csv(std::ostream& os, const EnumerationSummary& summary) {
    os << "iteration,capital_loaned,player_b,player_c,player_b_net,a_win,a_loss,a_recovered\n";
    int iteration = 1;
    for (const OutcomeRow& row : summary.rows) {
        os << iteration++ << ',' << summary.config.loan_coins << ',' << row.b_end << ','
           << row.c_end << ',' << row.b_net << ',' << row.a_win << ',' << row.a_loss << ','
           << row.a_recovered << '\n';
    }
    // Totals row carries only the three summed columns, like the rendered table.
    os << "totals,,,," << summary.total_b_net << ',' << summary.total_win << ','
       << summary.total_loss << ",\n";
}

void write_discrete_table(std::ostream& os, const EnumerationSummary& summary) {
    os << "iteration  capital  player_b  player_c  b_net  a_win  a_loss  a_recovered\n";
    int iteration = 1;
    for (const OutcomeRow& row : summary.rows) {
        os << std::setw(9) << iteration++ << "  " << std::setw(7) << summary.config.loan_coins
           << "  " << std::setw(8) << row.b_end << "  " << std::setw(8) << row.c_end << "  "
           << std::setw(5) << row.b_net << "  " << std::setw(5) << row.a_win << "  "
           << std::setw(6) << row.a_loss << "  " << std::setw(11) << row.a_recovered << '\n';
    }
    os << std::setw(9) << "totals" << "  " << std::setw(7) << "" << "  " << std::setw(8) << ""
       << "  " << std::setw(8) << "" << "  " << std::setw(5) << summary.total_b_net << "  "
       << std::setw(5) << summary.total_win << "  " << std::setw(6) << summary.total_loss
       << "  " << std::setw(11) << "" << '\n';
    os << "expected net per round: " << summary.expected_net.num << '/'
       << summary.expected_net.den << " = " << format_double(summary.expected_net.value())
       << " coins\n";
}

nlohmann::ordered_json discrete_json(const EnumerationSummary& summary) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const OutcomeRow& row : summary.rows) {
        rows.push_back({{"b_end", row.b_end},
                        {"a_recovered", row.a_recovered},
                        {"a_win", row.a_win},
                        {"a_loss", row.a_loss},
                        {"b_net", row.b_net},
                        {"c_end", row.c_end}});
    }
    return nlohmann::ordered_json{
        {"config",
         {{"loan_coins", summary.config.loan_coins},
          {"competitor_coins", summary.config.competitor_coins},
          {"interest_coins", summary.config.interest_coins},
          {"total_pot", summary.config.total_pot()}}},
        {"rows", rows},
        {"totals",
         {{"b_net", summary.total_b_net},
          {"a_win", summary.total_win},
          {"a_loss", summary.total_loss},
          {"a_net", summary.total_win - summary.total_loss}}},
        {"expected_net",
         {{"num", summary.expected_net.num},
          {"den", summary.expected_net.den},
          {"value", summary.expected_net.value()}}}};
}

// --- analytic / breakeven ---------------------------------------------------

AnalyticReport evaluate_analytic(const PayoffSpec& spec, const GaussianParams& params,
                                 const QuadratureConfig& q) {
    AnalyticReport report;
    report.expected_win = expected_win(spec, params, q);
    report.expected_loss = expected_loss(spec, params, q);
    report.expected_return_ratio = expected_return_ratio(spec, params, q);
    report.expected_net_payoff = expected_net_payoff(spec, params, q);
    return report;
}

nlohmann::ordered_json analytic_json(const PayoffSpec& spec, const GaussianParams& params,
                                     const AnalyticReport& report) {
    return nlohmann::ordered_json{{"mu", params.mu},
                                  {"sigma", params.sigma},
                                  {"interest", spec.interest},
                                  {"lower_bound", spec.lower_bound},
                                  {"upper_bound", spec.upper_bound},
                                  {"renormalize", spec.renormalize},
                                  {"expected_win", report.expected_win},
                                  {"expected_loss", report.expected_loss},
                                  {"expected_return_ratio", report.expected_return_ratio},
                                  {"expected_net_payoff", report.expected_net_payoff}};
}

nlohmann::ordered_json breakeven_json(const BreakevenRequest& req, double interest) {
    return nlohmann::ordered_json{{"mu", req.params.mu},
                                  {"sigma", req.params.sigma},
                                  {"i_max", req.i_max},
                                  {"tol", req.tol},
                                  {"breakeven_interest", interest},
                                  {"breakeven_percent", 100.0 * interest}};
}

// --- sweep / curves ---------------------------------------------------------

void write_sweep_csv(std::ostream& os, const SweepGrid& grid) {
    os << "mu,interest,sigma,expected_return\n";
    for (std::size_t r = 0; r < grid.mu_values.size(); ++r) {
        for (std::size_t c = 0; c < grid.i_values.size(); ++c) {
            os << format_double(grid.mu_values[r]) << ',' << format_double(grid.i_values[c])
               << ',' << format_double(grid.sigma) << ',' << format_double(grid.at(r, c))
               << '\n';
        }
    }
}

nlohmann::ordered_json sweep_json(const SweepGrid& grid) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < grid.mu_values.size(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < grid.i_values.size(); ++c) row.push_back(grid.at(r, c));
        cells.push_back(std::move(row));
    }
    return nlohmann::ordered_json{{"mu_values", grid.mu_values},
                                  {"i_values", grid.i_values},
                                  {"sigma", grid.sigma},
                                  {"expected_return", std::move(cells)}};
}

std::vector<CurveRow> curve_rows(const std::vector<double>& i_list, const GaussianParams& params,
                                 int n_points) {
    const PayoffCurves curves = payoff_curve_samples(i_list, params, n_points);
    std::vector<CurveRow> rows;
    rows.reserve(curves.weighted.size() * curves.x.size());
    for (const auto& [interest, values] : curves.weighted) {
        for (std::size_t j = 0; j < curves.x.size(); ++j) {
            rows.push_back(CurveRow{params.mu, params.sigma, interest, curves.x[j],
                                    curves.density[j], values[j]});
        }
    }
    return rows;
}

void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
    os << "mu,sigma,interest,x,density,weighted_payoff\n";
    for (const CurveRow& row : rows) {
        os << format_double(row.mu) << ',' << format_double(row.sigma) << ','
           << format_double(row.interest) << ',' << format_double(row.x) << ','
           << format_double(row.density) << ',' << format_double(row.weighted_payoff) << '\n';
    }
}

// --- simulation -------------------------------------------------------------

nlohmann::ordered_json simulation_json(const std::string& mode, const SimulationResult& result,
                                       const nlohmann::ordered_json& config_echo) {
    return nlohmann::ordered_json{{"mode", mode},
                                  {"config", config_echo},
                                  {"result",
                                   {{"mean_payoff", result.mean_payoff},
                                    {"std_error", result.std_error},
                                    {"win_total", result.win_total},
                                    {"loss_total", result.loss_total},
                                    {"ratio_estimate", result.ratio_estimate},
                                    {"n_rounds", result.n_rounds},
                                    {"seed", result.seed}}}};
}

// --- reproduce --------------------------------------------------------------

namespace {

struct Claim {
    std::string name;
    std::string description;
    nlohmann::ordered_json observed;
    std::string criterion;
    bool pass = false;
};

nlohmann::ordered_json claim_json(const Claim& claim) {
    return nlohmann::ordered_json{{"name", claim.name},
                                  {"description", claim.description},
                                  {"observed", claim.observed},
                                  {"criterion", claim.criterion},
                                  {"pass", claim.pass}};
}

}  // namespace

nlohmann::ordered_json build_claims(const QuadratureConfig& q) {
    std::vector<Claim> claims;

    {
        const EnumerationSummary t1 = enumerate_outcomes(DiscreteGameConfig{5, 5, 1});
        Claim claim;
        claim.name = "table1_totals";
        claim.description = "coin game, 1 coin interest on 5: lender nets -10 over 11 outcomes";
        claim.observed = {{"a_win", t1.total_win},
                          {"a_loss", t1.total_loss},
                          {"b_net", t1.total_b_net},
                          {"a_net", t1.total_win - t1.total_loss}};
        claim.criterion = "a_win=5, a_loss=15, b_net=10";
        claim.pass = t1.total_win == 5 && t1.total_loss == 15 && t1.total_b_net == 10;
        claims.push_back(claim);
    }
    {
        const EnumerationSummary t2 = enumerate_outcomes(DiscreteGameConfig{5, 5, 5});
        Claim claim;
        claim.name = "table2_totals";
        claim.description = "coin game, 100% interest: lender exactly breaks even";
        claim.observed = {{"a_win", t2.total_win},
                          {"a_loss", t2.total_loss},
                          {"b_net", t2.total_b_net},
                          {"a_net", t2.total_win - t2.total_loss}};
        claim.criterion = "a_win=15, a_loss=15, a_net=0";
        claim.pass = t2.total_win == 15 && t2.total_loss == 15 &&
                     t2.total_win - t2.total_loss == 0;
        claims.push_back(claim);
    }
    {
        const auto k = discrete_breakeven(5, 5);
        Claim claim;
        claim.name = "discrete_breakeven_100pct";
        claim.description = "smallest break-even interest on a 5-coin loan vs 5-coin rival";
        claim.observed = {{"interest_coins", k ? nlohmann::ordered_json(*k)
                                               : nlohmann::ordered_json(nullptr)},
                          {"percent", k ? nlohmann::ordered_json(100.0 * *k / 5.0)
                                        : nlohmann::ordered_json(nullptr)}};
        claim.criterion = "interest_coins = 5 (100% of principal)";
        claim.pass = k.has_value() && *k == 5;
        claims.push_back(claim);
    }
    {
        BreakevenRequest req;
        req.quadrature = q;
        const double root = solve_breakeven(req);
        Claim claim;
        claim.name = "breakeven_mu0";
        claim.description = "fair continuous game: break-even needs 100% interest";
        claim.observed = {{"breakeven_interest", root}};
        claim.criterion = "|breakeven_interest - 1.0| <= 0.01";
        claim.pass = std::abs(root - 1.0) <= 0.01;
        claims.push_back(claim);
    }
    {
        PayoffSpec spec{};
        spec.interest = 0.15;
        const double ratio = expected_return_ratio(spec, GaussianParams{0.05, 0.25}, q);
        Claim claim;
        claim.name = "ratio_negative_at_15pct_with_5pct_edge";
        claim.description = "5% outcome advantage still loses money at 15% interest";
        claim.observed = {{"expected_return_ratio", ratio}};
        claim.criterion = "expected_return_ratio < 0";
        claim.pass = ratio < 0.0;
        claims.push_back(claim);
    }
    {
        BreakevenRequest req;
        req.params = GaussianParams{0.05, 0.25};
        req.quadrature = q;
        const double root = solve_breakeven(req);
        Claim claim;
        claim.name = "breakeven_exceeds_15pct_with_5pct_edge";
        claim.description = "the 5%-edge break-even rate lies above 15%";
        claim.observed = {{"breakeven_interest", root}};
        claim.criterion = "breakeven_interest > 0.15";
        claim.pass = root > 0.15;
        claims.push_back(claim);
    }

    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Claim& claim : claims) out.push_back(claim_json(claim));
    return nlohmann::ordered_json{{"claims", out}};
}

namespace {

std::vector<double> linear_grid(double start, double stop, double step) {
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-6)) + 1;
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = start + step * static_cast<double>(i);
    return values;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    os << contents;
    os.flush();
    if (!os) throw IoError("failed writing " + path.string());
}

}  // namespace

int run_reproduce(const ReproduceConfig& config, std::ostream& log,
                  nlohmann::ordered_json* manifest_out) {
    const auto t0 = std::chrono::steady_clock::now();
    const GaussianParams fig_params{0.0, 0.25};

    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) {
        log << "error: cannot create " << config.out_dir.string() << ": " << ec.message()
            << '\n';
        return 5;
    }

    struct Artifact {
        std::string file;
        std::function<std::string()> render;
    };

    bool claims_all_pass = false;
    const std::vector<Artifact> artifacts = {
        {"table1.csv",
         [&] {
             std::ostringstream os;
             write_discrete_csv(os, enumerate_outcomes(DiscreteGameConfig{5, 5, 1}));
             return os.str();
         }},
        {"table2.csv",
         [&] {
             std::ostringstream os;
             write_discrete_csv(os, enumerate_outcomes(DiscreteGameConfig{5, 5, 5}));
             return os.str();
         }},
        {"fig2_curves.csv",
         [&] {
             std::ostringstream os;
             write_curves_csv(os, curve_rows({1.0, 0.2}, fig_params, 401));
             return os.str();
         }},
        {"fig3a_curves.csv",
         [&] {
             std::ostringstream os;
             write_curves_csv(os, curve_rows({0.01, 0.10, 0.20, 0.50}, fig_params, 401));
             return os.str();
         }},
        {"fig3b_curves.csv",
         [&] {
             std::vector<CurveRow> rows;
             for (double mu : {0.0, 0.01, 0.05, 0.10}) {
                 const auto family =
                     curve_rows({0.2}, GaussianParams{mu, fig_params.sigma}, 401);
                 rows.insert(rows.end(), family.begin(), family.end());
             }
             std::ostringstream os;
             write_curves_csv(os, rows);
             return os.str();
         }},
        {"fig4_surface.csv",
         [&] {
             const SweepGrid grid = sweep(linear_grid(0.0, 0.10, 0.01),
                                          linear_grid(0.01, 1.60, 0.01), 0.25, config.quadrature);
             std::ostringstream os;
             write_sweep_csv(os, grid);
             return os.str();
         }},
        {"breakeven_curve.csv",
         [&] {
             std::ostringstream os;
             os << "mu,sigma,breakeven_interest\n";
             for (double mu : linear_grid(0.0, 0.10, 0.005)) {
                 BreakevenRequest req;
                 req.params = GaussianParams{mu, 0.25};
                 req.quadrature = config.quadrature;
                 os << format_double(mu) << ",0.25," << format_double(solve_breakeven(req))
                    << '\n';
             }
             return os.str();
         }},
        {"claims.json",
         [&] {
             const nlohmann::ordered_json claims = build_claims(config.quadrature);
             claims_all_pass = true;
             for (const auto& claim : claims.at("claims")) {
                 claims_all_pass = claims_all_pass && claim.at("pass").get<bool>();
             }
             return claims.dump(2) + "\n";
         }},
    };

    nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
    int failures = 0;
    bool io_failure = false;
    for (const Artifact& artifact : artifacts) {
        const std::filesystem::path path = config.out_dir / artifact.file;
        nlohmann::ordered_json entry{{"file", artifact.file}};
        try {
            write_text_file(path, artifact.render());
            entry["bytes"] = static_cast<std::uint64_t>(std::filesystem::file_size(path));
            entry["status"] = "ok";
            log << "wrote " << path.string() << '\n';
        } catch (const IoError& e) {
            entry["status"] = std::string("failed: ") + e.what();
            ++failures;
            io_failure = true;
            log << "error: " << e.what() << '\n';
        } catch (const std::exception& e) {
            entry["status"] = std::string("failed: ") + e.what();
            ++failures;
            log << "error: " << artifact.file << ": " << e.what() << '\n';
        }
        outputs.push_back(std::move(entry));
    }

    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    nlohmann::ordered_json manifest{
        {"command", "reproduce"},
        {"version", kVersion},
        {"parameters",
         {{"out_dir", config.out_dir.string()},
          {"sigma", 0.25},
          {"quadrature",
           {{"abs_tol", config.quadrature.abs_tol},
            {"max_subdivisions", config.quadrature.max_subdivisions}}}}},
        {"seeds", nlohmann::ordered_json::array()},
        {"outputs", outputs},
        {"claims_all_pass", claims_all_pass},
        {"duration_seconds", duration},
        {"success", failures == 0}};

    int exit_code = 0;
    try {
        write_text_file(config.out_dir / "manifest.json", manifest.dump(2) + "\n");
        log << "wrote " << (config.out_dir / "manifest.json").string() << '\n';
    } catch (const IoError& e) {
        log << "error: " << e.what() << '\n';
        exit_code = 5;
    }
    if (manifest_out) *manifest_out = manifest;
    if (failures > 0) exit_code = io_failure ? 5 : 3;
    return exit_code;
}

}  // namespace zsl
