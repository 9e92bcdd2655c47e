#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace zsl {

// Finite three-player coin game: investor A lends `loan_coins` to borrower B,
// who plays against competitor C for the whole pot. One round, all final
// holdings of B equally likely.
struct DiscreteGameConfig {
    std::int64_t loan_coins = 5;
    std::int64_t competitor_coins = 5;
    std::int64_t interest_coins = 1;

    std::int64_t total_pot() const noexcept { return loan_coins + competitor_coins; }

    // Throws std::domain_error when the configuration is invalid.
    void validate() const;
};

// One equiprobable outcome of a round, keyed by B's final holding.
struct OutcomeRow {
    std::int64_t b_end = 0;        // B's coins when the round stops
    std::int64_t a_recovered = 0;  // coins returned to A: min(b_end, loan + interest)
    std::int64_t a_win = 0;        // interest actually collected
    std::int64_t a_loss = 0;       // principal shortfall
    std::int64_t b_net = 0;        // coins B keeps after repaying
    std::int64_t c_end = 0;        // competitor's coins
};

// Exact rational; denominator kept positive, fraction reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

struct EnumerationSummary {
    DiscreteGameConfig config;
    std::vector<OutcomeRow> rows;  // one per b_end in 0..total_pot
    std::int64_t total_win = 0;
    std::int64_t total_loss = 0;
    std::int64_t total_b_net = 0;
    Rational expected_net;  // (total_win - total_loss) / (total_pot + 1)
};

OutcomeRow make_outcome_row(std::int64_t b_end, const DiscreteGameConfig& config);

// Investor's signed payoff for one outcome, in coins: a_win - a_loss.
std::int64_t investor_payoff(std::int64_t b_end, const DiscreteGameConfig& config);

// Coins the borrower keeps after settling the loan: max(b_end - loan - interest, 0).
std::int64_t borrower_net(std::int64_t b_end, const DiscreteGameConfig& config);

// All outcomes with exact integer totals.
EnumerationSummary enumerate_outcomes(const DiscreteGameConfig& config);

// Smallest interest (coins) with nonnegative investor expectation, or nullopt
// when no interest up to the whole pot suffices.
std::optional<std::int64_t> discrete_breakeven(std::int64_t loan_coins,
                                               std::int64_t competitor_coins);

}  // namespace zsl
