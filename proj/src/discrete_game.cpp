#include "zsl/discrete_game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zsl {

void DiscreteGameConfig::validate() const {
    if (loan_coins < 1) {
        throw std::domain_error("loan_coins must be >= 1, got " + std::to_string(loan_coins));
    }
    if (competitor_coins < 0) {
        throw std::domain_error("competitor_coins must be >= 0, got " +
                                std::to_string(competitor_coins));
    }
    if (interest_coins < 0) {
        throw std::domain_error("interest_coins must be >= 0, got " +
                                std::to_string(interest_coins));
    }
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

namespace {

void check_b_end(std::int64_t b_end, const DiscreteGameConfig& config) {
    config.validate();
    if (b_end < 0 || b_end > config.total_pot()) {
        throw std::domain_error("b_end " + std::to_string(b_end) + " outside [0, " +
                                std::to_string(config.total_pot()) + "]");
    }
}

}  // namespace

OutcomeRow make_outcome_row(std::int64_t b_end, const DiscreteGameConfig& config) {
    check_b_end(b_end, config);
    const std::int64_t owed = config.loan_coins + config.interest_coins;
    OutcomeRow row;
    row.b_end = b_end;
    row.a_recovered = std::min(b_end, owed);
    row.a_win = std::max<std::int64_t>(row.a_recovered - config.loan_coins, 0);
    row.a_loss = std::max<std::int64_t>(config.loan_coins - row.a_recovered, 0);
    row.b_net = std::max<std::int64_t>(b_end - owed, 0);
    row.c_end = config.total_pot() - b_end;
    return row;
}

std::int64_t investor_payoff(std::int64_t b_end, const DiscreteGameConfig& config) {
    const OutcomeRow row = make_outcome_row(b_end, config);
    return row.a_win - row.a_loss;
}

std::int64_t borrower_net(std::int64_t b_end, const DiscreteGameConfig& config) {
    return make_outcome_row(b_end, config).b_net;
}

EnumerationSummary enumerate_outcomes(const DiscreteGameConfig& config) {
    config.validate();
    EnumerationSummary summary;
    summary.config = config;
    const std::int64_t pot = config.total_pot();
    summary.rows.reserve(static_cast<std::size_t>(pot) + 1);
    for (std::int64_t b = 0; b <= pot; ++b) {
        const OutcomeRow row = make_outcome_row(b, config);
        summary.total_win += row.a_win;
        summary.total_loss += row.a_loss;
        summary.total_b_net += row.b_net;
        summary.rows.push_back(row);
    }
    summary.expected_net = make_rational(summary.total_win - summary.total_loss, pot + 1);
    return summary;
}

std::optional<std::int64_t> discrete_breakeven(std::int64_t loan_coins,
                                               std::int64_t competitor_coins) {
    DiscreteGameConfig config{loan_coins, competitor_coins, 0};
    config.validate();
    // Expected net is monotone in the interest, so the first nonnegative hit
    // on the linear scan is the break-even.
    for (std::int64_t k = 0; k <= config.total_pot(); ++k) {
        config.interest_coins = k;
        const EnumerationSummary summary = enumerate_outcomes(config);
        if (summary.total_win - summary.total_loss >= 0) return k;
    }
    return std::nullopt;
}

}  // namespace zsl
