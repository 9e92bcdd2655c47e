#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zsl/breakeven.hpp"
#include "zsl/discrete_game.hpp"
#include "zsl/errors.hpp"
#include "zsl/gaussian_model.hpp"
#include "zsl/monte_carlo.hpp"
#include "zsl/reporting.hpp"
#include "zsl/version.hpp"

namespace {

// Documented and stable; tests rely on these.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitNumerical = 3,
    kExitNoBreakEven = 4,
    kExitIo = 5,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rates come in as "0.2" or "20%"; canonical form is the fraction.
double parse_rate(const std::string& text) {
    std::string body = text;
    double scale = 1.0;
    if (!body.empty() && body.back() == '%') {
        body.pop_back();
        scale = 0.01;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(body, &used);
    } catch (const std::exception&) {
        throw UsageError("'" + text + "' is not a number or percentage");
    }
    if (used != body.size()) {
        throw UsageError("'" + text + "' is not a number or percentage");
    }
    return value * scale;
}

std::int64_t parse_coins(const std::string& text) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw UsageError("'" + text + "' is not a whole number of coins");
    }
    if (used != text.size()) {
        throw UsageError("'" + text + "' is not a whole number of coins");
    }
    return value;
}

// "start:stop:step", every component a rate; inclusive of stop up to rounding.
std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ':')) parts.push_back(item);
    if (parts.size() != 3) {
        throw UsageError("range '" + text + "' must be start:stop:step");
    }
    const double start = parse_rate(parts[0]);
    const double stop = parse_rate(parts[1]);
    const double step = parse_rate(parts[2]);
    if (!(step > 0.0)) throw UsageError("range step must be positive in '" + text + "'");
    if (stop < start) throw UsageError("range '" + text + "' is empty");
    const auto n = static_cast<std::size_t>((stop - start) / step + 1e-6) + 1;
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = start + step * static_cast<double>(i);
    return values;
}

void write_file_or_throw(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw zsl::IoError("cannot open " + path + " for writing");
    os << contents;
    os.flush();
    if (!os) throw zsl::IoError("failed writing " + path);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file_or_throw(out_path, text);
    }
}

struct DiscreteOpts {
    std::int64_t loan = 5;
    std::int64_t competitor = 5;
    std::int64_t interest = 1;
    bool breakeven = false;
    bool json = false;
    std::string out;
};

int run_discrete(const DiscreteOpts& opts) {
    if (opts.breakeven) {
        const auto coins = zsl::discrete_breakeven(opts.loan, opts.competitor);
        if (!coins) {
            std::cerr << "no break-even interest exists up to the full pot for loan="
                      << opts.loan << " competitor=" << opts.competitor << "\n";
            return kExitNoBreakEven;
        }
        const double percent =
            100.0 * static_cast<double>(*coins) / static_cast<double>(opts.loan);
        if (opts.json) {
            const nlohmann::ordered_json j{{"loan_coins", opts.loan},
                                           {"competitor_coins", opts.competitor},
                                           {"breakeven_interest_coins", *coins},
                                           {"breakeven_percent", percent}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "breakeven_interest_coins " << *coins << " ("
                      << zsl::format_double(percent) << "% of principal)\n";
        }
        return kExitOk;
    }

    const zsl::EnumerationSummary summary =
        zsl::enumerate_outcomes({opts.loan, opts.competitor, opts.interest});
    if (!opts.out.empty()) {
        std::ostringstream os;
        zsl::write_discrete_csv(os, summary);
        write_file_or_throw(opts.out, os.str());
    }
    if (opts.json) {
        std::cout << zsl::discrete_json(summary).dump(2) << "\n";
    } else if (opts.out.empty()) {
        zsl::write_discrete_table(std::cout, summary);
    }
    return kExitOk;
}

struct AnalyticOpts {
    std::string mu = "0";
    std::string sigma = "0.25";
    std::string interest = "0.2";
    bool renormalize = false;
    bool json = false;
};

int run_analytic(const AnalyticOpts& opts) {
    zsl::PayoffSpec spec{};
    spec.interest = parse_rate(opts.interest);
    spec.renormalize = opts.renormalize;
    const zsl::GaussianParams params{parse_rate(opts.mu), parse_rate(opts.sigma)};
    const zsl::AnalyticReport report = zsl::evaluate_analytic(spec, params);
    if (opts.json) {
        std::cout << zsl::analytic_json(spec, params, report).dump(2) << "\n";
    } else {
        std::cout << "expected_win            " << zsl::format_double(report.expected_win)
                  << "\n"
                  << "expected_loss           " << zsl::format_double(report.expected_loss)
                  << "\n"
                  << "expected_return_ratio   "
                  << zsl::format_double(report.expected_return_ratio) << "\n"
                  << "expected_net_payoff     "
                  << zsl::format_double(report.expected_net_payoff) << "\n";
    }
    return kExitOk;
}

struct BreakevenOpts {
    std::string mu = "0";
    std::string sigma = "0.25";
    std::string i_max = "2.0";
    double tol = 1e-6;
    bool json = false;
};

int run_breakeven(const BreakevenOpts& opts) {
    zsl::BreakevenRequest req;
    req.params = zsl::GaussianParams{parse_rate(opts.mu), parse_rate(opts.sigma)};
    req.i_max = parse_rate(opts.i_max);
    req.tol = opts.tol;
    const double root = zsl::solve_breakeven(req);
    if (opts.json) {
        std::cout << zsl::breakeven_json(req, root).dump(2) << "\n";
    } else {
        std::cout << "breakeven_interest " << zsl::format_double(root) << " ("
                  << zsl::format_double(100.0 * root) << "%)\n";
    }
    return kExitOk;
}

struct SweepOpts {
    std::string mu_range = "0:0.10:0.01";
    std::string i_range = "0.01:1.60:0.01";
    std::string sigma = "0.25";
    bool json = false;
    std::string out;
};

int run_sweep(const SweepOpts& opts) {
    const zsl::SweepGrid grid =
        zsl::sweep(parse_range(opts.mu_range), parse_range(opts.i_range),
                   parse_rate(opts.sigma));
    if (opts.json) {
        emit(zsl::sweep_json(grid).dump(2) + "\n", opts.out);
    } else {
        std::ostringstream os;
        zsl::write_sweep_csv(os, grid);
        emit(os.str(), opts.out);
    }
    return kExitOk;
}

struct SimulateOpts {
    std::string mode = "gaussian";
    std::uint64_t n_rounds = 1'000'000;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string mu = "0";
    std::string sigma = "0.25";
    std::string interest = "0.2";
    std::int64_t loan = 5;
    std::int64_t competitor = 5;
    bool json = false;  // reports are always JSON; accepted for symmetry
    std::string out;
};

int run_simulate(const SimulateOpts& opts) {
    nlohmann::ordered_json report;
    if (opts.mode == "gaussian") {
        zsl::SimulationConfig config;
        config.n_rounds = opts.n_rounds;
        config.params = zsl::GaussianParams{parse_rate(opts.mu), parse_rate(opts.sigma)};
        config.spec.interest = parse_rate(opts.interest);
        config.seed = opts.seed;
        config.workers = opts.workers;
        const zsl::SimulationResult result = zsl::simulate_investor(config);
        const nlohmann::ordered_json echo{{"mu", config.params.mu},
                                          {"sigma", config.params.sigma},
                                          {"interest", config.spec.interest},
                                          {"n_rounds", config.n_rounds},
                                          {"seed", config.seed}};
        report = zsl::simulation_json("gaussian", result, echo);
    } else if (opts.mode == "discrete") {
        const zsl::DiscreteGameConfig config{opts.loan, opts.competitor,
                                             parse_coins(opts.interest)};
        const zsl::SimulationResult result =
            zsl::simulate_discrete(config, opts.n_rounds, opts.seed, opts.workers);
        const nlohmann::ordered_json echo{{"loan_coins", config.loan_coins},
                                          {"competitor_coins", config.competitor_coins},
                                          {"interest_coins", config.interest_coins},
                                          {"n_rounds", opts.n_rounds},
                                          {"seed", opts.seed}};
        report = zsl::simulation_json("discrete", result, echo);
    } else {
        throw UsageError("--mode must be 'gaussian' or 'discrete', got '" + opts.mode + "'");
    }
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!opts.out.empty()) write_file_or_throw(opts.out, text);
    return kExitOk;
}

struct ReproduceOpts {
    std::string out_dir;
    bool json = false;
};

int run_reproduce_cmd(const ReproduceOpts& opts) {
    zsl::ReproduceConfig config;
    config.out_dir = opts.out_dir;
    nlohmann::ordered_json manifest;
    const int code = zsl::run_reproduce(config, std::cout, &manifest);
    if (opts.json) std::cout << manifest.dump(2) << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-sum hard-money lending model: exact coin game, Gaussian analytics, "
                 "break-even rates, sweeps and Monte Carlo cross-checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", zsl::kVersion);

    DiscreteOpts discrete_opts;
    auto* discrete = app.add_subcommand(
        "discrete", "enumerate the finite coin game exactly (or find its break-even interest)");
    discrete->add_option("--loan", discrete_opts.loan, "coins lent to player B")
        ->capture_default_str();
    discrete
        ->add_option("--competitor", discrete_opts.competitor, "coins held by player C")
        ->capture_default_str();
    discrete
        ->add_option("--interest", discrete_opts.interest, "simple interest in whole coins")
        ->capture_default_str();
    discrete->add_flag("--breakeven", discrete_opts.breakeven,
                       "print the smallest break-even interest instead of the table");
    discrete->add_flag("--json", discrete_opts.json, "machine-readable output");
    discrete->add_option("--out", discrete_opts.out, "write the table as CSV to this path");

    AnalyticOpts analytic_opts;
    auto* analytic =
        app.add_subcommand("analytic", "evaluate the Gaussian win/loss expectations");
    analytic->add_option("--mu", analytic_opts.mu, "mean outcome (fraction or N%)")
        ->capture_default_str();
    analytic->add_option("--sigma", analytic_opts.sigma, "outcome standard deviation")
        ->capture_default_str();
    analytic
        ->add_option("--interest", analytic_opts.interest, "simple interest (fraction or N%)")
        ->capture_default_str();
    analytic->add_flag("--renormalize", analytic_opts.renormalize,
                       "divide by the Gaussian mass inside the outcome range");
    analytic->add_flag("--json", analytic_opts.json, "machine-readable output");

    BreakevenOpts breakeven_opts;
    auto* breakeven =
        app.add_subcommand("breakeven", "solve for the zero-expected-return interest rate");
    breakeven->add_option("--mu", breakeven_opts.mu, "mean outcome (fraction or N%)")
        ->capture_default_str();
    breakeven->add_option("--sigma", breakeven_opts.sigma, "outcome standard deviation")
        ->capture_default_str();
    breakeven->add_option("--i-max", breakeven_opts.i_max, "upper search bound on interest")
        ->capture_default_str();
    breakeven->add_option("--tol", breakeven_opts.tol, "root tolerance on the rate")
        ->capture_default_str();
    breakeven->add_flag("--json", breakeven_opts.json, "machine-readable output");

    SweepOpts sweep_opts;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "expected return over a (mu, interest) grid, long-form CSV");
    sweep_cmd->add_option("--mu-range", sweep_opts.mu_range, "mu grid as start:stop:step")
        ->capture_default_str();
    sweep_cmd->add_option("--i-range", sweep_opts.i_range, "interest grid as start:stop:step")
        ->capture_default_str();
    sweep_cmd->add_option("--sigma", sweep_opts.sigma, "outcome standard deviation")
        ->capture_default_str();
    sweep_cmd->add_flag("--json", sweep_opts.json, "emit the grid as JSON instead of CSV");
    sweep_cmd->add_option("--out", sweep_opts.out, "write to this path instead of stdout");

    SimulateOpts simulate_opts;
    auto* simulate =
        app.add_subcommand("simulate", "seeded Monte Carlo cross-check of the analytics");
    simulate->add_option("--mode", simulate_opts.mode, "gaussian or discrete")
        ->capture_default_str();
    simulate->add_option("--n", simulate_opts.n_rounds, "number of simulated rounds")
        ->capture_default_str();
    simulate->add_option("--seed", simulate_opts.seed, "RNG seed")
        ->envname("ZSL_SEED")
        ->capture_default_str();
    simulate
        ->add_option("--workers", simulate_opts.workers,
                     "parallelism hint; never changes the numbers")
        ->envname("ZSL_WORKERS")
        ->capture_default_str();
    simulate->add_option("--mu", simulate_opts.mu, "gaussian mode: mean outcome")
        ->capture_default_str();
    simulate->add_option("--sigma", simulate_opts.sigma, "gaussian mode: standard deviation")
        ->capture_default_str();
    simulate
        ->add_option("--interest", simulate_opts.interest,
                     "interest: fraction/percent (gaussian) or coins (discrete)")
        ->capture_default_str();
    simulate->add_option("--loan", simulate_opts.loan, "discrete mode: coins lent")
        ->capture_default_str();
    simulate
        ->add_option("--competitor", simulate_opts.competitor, "discrete mode: competitor coins")
        ->capture_default_str();
    simulate->add_flag("--json", simulate_opts.json, "reports are always JSON; accepted for symmetry");
    simulate->add_option("--out", simulate_opts.out, "also write the JSON report to this path");

    ReproduceOpts reproduce_opts;
    auto* reproduce = app.add_subcommand(
        "reproduce", "write every table/figure artifact plus claims.json and manifest.json");
    reproduce->add_option("--out-dir", reproduce_opts.out_dir, "destination directory")
        ->required();
    reproduce->add_flag("--json", reproduce_opts.json, "also print the manifest to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (discrete->parsed()) return run_discrete(discrete_opts);
        if (analytic->parsed()) return run_analytic(analytic_opts);
        if (breakeven->parsed()) return run_breakeven(breakeven_opts);
        if (sweep_cmd->parsed()) return run_sweep(sweep_opts);
        if (simulate->parsed()) return run_simulate(simulate_opts);
        if (reproduce->parsed()) return run_reproduce_cmd(reproduce_opts);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const zsl::NoBreakEvenError& e) {
        std::cerr << "no break-even: " << e.what() << "\n";
        return kExitNoBreakEven;
    } catch (const zsl::DegenerateRegimeError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const zsl::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const zsl::RejectionBudgetError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const zsl::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
