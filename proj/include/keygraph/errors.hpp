#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace keygraph {

/// A requested dimensioning target cannot be met: the channel probability
/// needed to reach `required_link_prob` exceeds 1 given the available
/// shared-key probability.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(double required_link_prob, double available_shared_prob,
                    double required_channel_prob)
        : std::runtime_error("infeasible: required p = " +
                             std::to_string(required_channel_prob) +
                             " > 1 (target p_e = " + std::to_string(required_link_prob) +
                             ", available p_s = " + std::to_string(available_shared_prob) + ")"),
          required_link_prob(required_link_prob),
          available_shared_prob(available_shared_prob),
          required_channel_prob(required_channel_prob) {}

    double required_link_prob;
    double available_shared_prob;
    double required_channel_prob;
};

/// An operation was asked to exceed its enforced size budget
/// (e.g. brute-force connectivity above 12 nodes).
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what_arg, std::size_t requested, std::size_t budget)
        : std::runtime_error(what_arg + ": " + std::to_string(requested) +
                             " exceeds budget " + std::to_string(budget)),
          requested(requested),
          budget(budget) {}

    std::size_t requested;
    std::size_t budget;
};

/// Malformed input file; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + message),
          line(line) {}

    std::size_t line;
};

}  // namespace keygraph
