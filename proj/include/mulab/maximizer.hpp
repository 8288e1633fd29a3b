#pragma once

// Maximization of mu(A, B, C) over shores |B| = |C| = k.
//
// For a fixed C, score(b) = sum_c wC(c) wA(b + c) and mu(A, B, C) = sum_{b in B} score(b),
// so the best B is the k highest-scoring elements. Because mu(A, B, C) = mu(A, C, B) the
// same routine also gives the best C for a fixed B.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mulab/kernels.hpp"
#include "mulab/subset.hpp"

namespace mulab {

struct MaximizeResult {
    Subset b;
    Subset c;
    std::uint64_t count = 0;
    bool exact = false;
    std::uint64_t iterations = 0;
    std::uint64_t restarts_used = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kExactBudget = 1e8;

/// score(b) for every b in G against the fixed opposite shore.
std::vector<std::uint64_t> response_scores(const Subset& a, const Subset& other);

/// The k highest-scoring elements, ties broken by ascending index.
Subset best_response(const Subset& a, const Subset& other, std::uint64_t k);

/// Exhaustive over C with B = best_response(A, C, k). Throws BudgetExceeded when
/// binomial(N, k) * N > budget.
MaximizeResult exact_maximize(const Subset& a, std::uint64_t k, double budget = kExactBudget);

struct AlternatingOptions {
    std::uint64_t restarts = 20;
    std::uint64_t seed = 0;
    std::uint64_t max_iters = 100;
    kernels::Exec exec = kernels::Exec::serial;
    /// Called with (restart, half_step, count) after every best response; may run concurrently
    /// when exec is parallel.
    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> on_half_step;
};

/// Seeded alternating best responses with random restarts; a lower bound on the true maximum.
MaximizeResult alternating_maximize(const Subset& a, std::uint64_t k, const AlternatingOptions& opts = {});

}  // namespace mulab
