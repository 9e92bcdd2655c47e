#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "zsl/discrete_game.hpp"
#include "zsl/reporting.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) out.push_back(item);
    return out;
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("zsl_test_" + tag);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_SUITE("cli_reporting") {

TEST_CASE("doubles round-trip through their shortest decimal form") {
    for (double v : {0.0, 1.0, -1.0, 0.1, 1.0 / 3.0, 1e-5, -0.0997021125439169,
                     12345.6789, 0.999936657516334}) {
        const std::string text = zsl::format_double(v);
        CHECK(std::strtod(text.c_str(), nullptr) == v);
    }
    CHECK(zsl::format_double(0.5) == "0.5");
    CHECK(zsl::format_double(-1.0) == "-1");
}

TEST_CASE("discrete CSV reproduces the one-coin-interest table byte for byte") {
    std::ostringstream os;
    zsl::write_discrete_csv(os, zsl::enumerate_outcomes({5, 5, 1}));
    const std::string expected =
        "iteration,capital_loaned,player_b,player_c,player_b_net,a_win,a_loss,a_recovered\n"
        "1,5,0,10,0,0,5,0\n"
        "2,5,1,9,0,0,4,1\n"
        "3,5,2,8,0,0,3,2\n"
        "4,5,3,7,0,0,2,3\n"
        "5,5,4,6,0,0,1,4\n"
        "6,5,5,5,0,0,0,5\n"
        "7,5,6,4,0,1,0,6\n"
        "8,5,7,3,1,1,0,6\n"
        "9,5,8,2,2,1,0,6\n"
        "10,5,9,1,3,1,0,6\n"
        "11,5,10,0,4,1,0,6\n"
        "totals,,,,10,5,15,\n";
    CHECK(os.str() == expected);
}

TEST_CASE("discrete table prints totals and the exact expectation") {
    std::ostringstream os;
    zsl::write_discrete_table(os, zsl::enumerate_outcomes({5, 5, 1}));
    const std::string text = os.str();
    CHECK(text.find("totals") != std::string::npos);
    CHECK(text.find("-10/11") != std::string::npos);
}

TEST_CASE("discrete JSON carries config, rows, totals and the rational expectation") {
    const auto j = zsl::discrete_json(zsl::enumerate_outcomes({5, 5, 5}));
    CHECK(j.at("config").at("total_pot") == 10);
    CHECK(j.at("rows").size() == 11);
    CHECK(j.at("totals").at("a_win") == 15);
    CHECK(j.at("totals").at("a_net") == 0);
    CHECK(j.at("expected_net").at("num") == 0);
    CHECK(j.at("expected_net").at("den") == 1);
}

TEST_CASE("analytic report and JSON") {
    zsl::PayoffSpec spec{};
    spec.interest = 0.2;
    const zsl::GaussianParams params{0.0, 0.25};
    const auto report = zsl::evaluate_analytic(spec, params);
    CHECK(std::abs(report.expected_win - 0.0696774273783002) < 1e-9);
    CHECK(std::abs(report.expected_loss - 0.0997021125439169) < 1e-9);
    const auto j = zsl::analytic_json(spec, params, report);
    for (const char* key : {"mu", "sigma", "interest", "expected_win", "expected_loss",
                            "expected_return_ratio", "expected_net_payoff"}) {
        CHECK(j.contains(key));
    }
}

TEST_CASE("sweep CSV round-trips every cell at full precision") {
    const zsl::SweepGrid grid = zsl::sweep({0.0, 0.05}, {0.2, 0.5, 1.0}, 0.25);
    std::ostringstream os;
    zsl::write_sweep_csv(os, grid);
    const auto lines = split(os.str(), '\n');
    REQUIRE(lines.size() >= 7);  // header + 6 cells
    CHECK(lines[0] == "mu,interest,sigma,expected_return");
    std::size_t k = 0;
    for (std::size_t r = 0; r < grid.mu_values.size(); ++r) {
        for (std::size_t c = 0; c < grid.i_values.size(); ++c, ++k) {
            const auto fields = split(lines[1 + k], ',');
            REQUIRE(fields.size() == 4);
            CHECK(std::strtod(fields[0].c_str(), nullptr) == grid.mu_values[r]);
            CHECK(std::strtod(fields[1].c_str(), nullptr) == grid.i_values[c]);
            CHECK(std::strtod(fields[3].c_str(), nullptr) == grid.at(r, c));
        }
    }
}

TEST_CASE("curve rows cover every interest and sample point") {
    const auto rows = zsl::curve_rows({0.01, 0.2}, zsl::GaussianParams{0.0, 0.25}, 101);
    CHECK(rows.size() == 2 * 101);
    std::ostringstream os;
    zsl::write_curves_csv(os, rows);
    const auto lines = split(os.str(), '\n');
    CHECK(lines[0] == "mu,sigma,interest,x,density,weighted_payoff");
    CHECK(lines.size() == 1 + rows.size());
}

TEST_CASE("simulation JSON echoes config without the workers hint") {
    zsl::SimulationResult result;
    result.mean_payoff = -0.03;
    result.std_error = 1e-4;
    result.win_total = 1.0;
    result.loss_total = 2.0;
    result.ratio_estimate = -0.5;
    result.n_rounds = 100;
    result.seed = 42;
    nlohmann::ordered_json echo{{"mu", 0.0}, {"sigma", 0.25}, {"interest", 0.2},
                                {"n_rounds", 100}, {"seed", 42}};
    const auto a = zsl::simulation_json("gaussian", result, echo);
    const auto b = zsl::simulation_json("gaussian", result, echo);
    CHECK(a.dump(2) == b.dump(2));
    CHECK_FALSE(a.at("config").contains("workers"));
    CHECK(a.at("result").at("seed") == 42);
}

TEST_CASE("headline claims all pass") {
    const auto claims = zsl::build_claims();
    REQUIRE(claims.at("claims").size() == 6);
    for (const auto& claim : claims.at("claims")) {
        CAPTURE(claim.at("name").get<std::string>());
        CHECK(claim.at("pass").get<bool>());
    }
}

TEST_CASE("reproduce writes every artifact and a truthful manifest") {
    const fs::path dir = fresh_dir("reproduce");
    zsl::ReproduceConfig config;
    config.out_dir = dir;
    std::ostringstream log;
    nlohmann::ordered_json manifest;
    const int code = zsl::run_reproduce(config, log, &manifest);
    CHECK(code == 0);
    const std::vector<std::string> expected = {
        "table1.csv",     "table2.csv",       "fig2_curves.csv",
        "fig3a_curves.csv", "fig3b_curves.csv", "fig4_surface.csv",
        "breakeven_curve.csv", "claims.json"};
    for (const auto& name : expected) {
        CAPTURE(name);
        CHECK(fs::exists(dir / name));
        CHECK(fs::file_size(dir / name) > 0);
    }
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(manifest.at("success").get<bool>());
    CHECK(manifest.at("claims_all_pass").get<bool>());
    CHECK(manifest.at("outputs").size() == expected.size());

    // fig4 surface has the full 11 x 160 grid
    const auto surface_lines = split(slurp(dir / "fig4_surface.csv"), '\n');
    CHECK(surface_lines[0] == "mu,interest,sigma,expected_return");
    std::size_t data_lines = 0;
    for (std::size_t i = 1; i < surface_lines.size(); ++i) {
        if (!surface_lines[i].empty()) ++data_lines;
    }
    CHECK(data_lines == 11 * 160);
    fs::remove_all(dir);
}

TEST_CASE("reproduce surfaces unwritable destinations as an I/O failure") {
    const fs::path blocker = fresh_dir("blocker");
    {
        std::ofstream os(blocker);  // a plain file where the directory should go
        os << "x";
    }
    zsl::ReproduceConfig config;
    config.out_dir = blocker / "out";
    std::ostringstream log;
    const int code = zsl::run_reproduce(config, log);
    CHECK(code == 5);
    fs::remove_all(blocker);
}

}  // TEST_SUITE
