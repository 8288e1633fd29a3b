#include "mulab/maximizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <numeric>
#include <optional>
#include <string>

#include "mulab/counting.hpp"
#include "mulab/sampler.hpp"

namespace mulab {

namespace {

struct Response {
    Subset shore;
    std::uint64_t count;
};

void check_k(const Subset& a, std::uint64_t k) {
    if (k < 1 || k > a.group().order()) {
        throw std::invalid_argument("shore size k=" + std::to_string(k) + " must lie in [1, " +
                                    std::to_string(a.group().order()) + "]");
    }
}

std::vector<std::uint64_t> scores_by_pairs(const Subset& a, const Subset& other) {
    const GroupSpec& g = a.group();
    const auto av = a.view();
    const auto ov = other.view();
    std::vector<std::uint64_t> score(g.order(), 0);
    for (std::size_t i = 0; i < av.elements.size(); ++i) {
        for (std::size_t j = 0; j < ov.elements.size(); ++j) {
            score[sub_unchecked(g, av.elements[i], ov.elements[j])] += av.weight(i) * ov.weight(j);
        }
    }
    return score;
}

// Z2^n: score = wA (*) wC, through three WHTs.
std::vector<std::uint64_t> scores_by_wht(const Subset& a, const Subset& other) {
    const auto wa = a.weights();
    const auto wo = other.weights();
    std::vector<double> fa(wa.begin(), wa.end());
    std::vector<double> fo(wo.begin(), wo.end());
    kernels::serial::wht(fa);
    kernels::serial::wht(fo);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fo[i];
    kernels::serial::wht(fa);
    const double inv_n = 1.0 / static_cast<double>(fa.size());
    std::vector<std::uint64_t> score(fa.size());
    for (std::size_t i = 0; i < fa.size(); ++i) score[i] = static_cast<std::uint64_t>(std::llround(fa[i] * inv_n));
    return score;
}

Response respond(const Subset& a, const Subset& other, std::uint64_t k) {
    const auto score = response_scores(a, other);
    std::vector<std::uint64_t> order(score.size());
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    const auto better = [&](std::uint64_t x, std::uint64_t y) {
        return score[x] != score[y] ? score[x] > score[y] : x < y;
    };
    if (k < order.size()) {
        std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(), better);
    }
    order.resize(k);
    std::uint64_t total = 0;
    for (auto v : order) total += score[v];
    return {Subset::from_indices(a.group(), std::move(order)), total};
}

void self_check(const Subset& a, const MaximizeResult& r) {
    const auto recomputed = mu_direct(a, r.b, r.c).count;
    if (recomputed != r.count) {
        throw std::logic_error("maximizer count " + std::to_string(r.count) + " disagrees with direct count " +
                               std::to_string(recomputed));
    }
}

double binomial(std::uint64_t n, std::uint64_t k) {
    k = std::min(k, n - k);
    double out = 1.0;
    for (std::uint64_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    return out;
}

}  // namespace

std::vector<std::uint64_t> response_scores(const Subset& a, const Subset& other) {
    require_same_group(a.group(), other.group());
    const GroupSpec& g = a.group();
    g.require_dense();
    const double pair_work = static_cast<double>(a.distinct()) * static_cast<double>(other.distinct());
    const double wht_work = static_cast<double>(g.order()) * std::max<std::uint64_t>(1, std::bit_width(g.order()) - 1);
    if (g.is_boolean() && pair_work > wht_work) return scores_by_wht(a, other);
    return scores_by_pairs(a, other);
}

Subset best_response(const Subset& a, const Subset& other, std::uint64_t k) {
    check_k(a, k);
    return respond(a, other, k).shore;
}

MaximizeResult exact_maximize(const Subset& a, std::uint64_t k, double budget) {
    check_k(a, k);
    const GroupSpec& g = a.group();
    const std::uint64_t n = g.order();
    const double work = binomial(n, k) * static_cast<double>(n);
    if (work > budget) {
        throw BudgetExceeded("exact search needs binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                             ") * N = " + std::to_string(work) + " steps, above the budget " +
                             std::to_string(budget) + "; use alternating_maximize");
    }

    std::vector<std::uint64_t> comb(k);
    std::iota(comb.begin(), comb.end(), std::uint64_t{0});
    MaximizeResult best{Subset::empty(g), Subset::empty(g), 0, true, 0, 1};
    bool have = false;
    while (true) {
        Subset c = Subset::from_indices(g, comb);
        Response r = respond(a, c, k);
        ++best.iterations;
        if (!have || r.count > best.count) {
            best.b = std::move(r.shore);
            best.c = std::move(c);
            best.count = r.count;
            have = true;
        }
        // Next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    self_check(a, best);
    return best;
}

MaximizeResult alternating_maximize(const Subset& a, std::uint64_t k, const AlternatingOptions& opts) {
    check_k(a, k);
    if (opts.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    const GroupSpec& g = a.group();

    struct Outcome {
        Subset b;
        Subset c;
        std::uint64_t count = 0;
        std::uint64_t rounds = 0;
    };
    std::vector<std::optional<Outcome>> outcomes(opts.restarts);
    std::vector<std::exception_ptr> errors(opts.restarts);

    auto run_restart = [&](std::uint64_t r) {
        try {
            Subset c = sample_subset(g, k, derive_seed(opts.seed, r), false);
            Subset b = Subset::empty(g);
            std::uint64_t count = 0;
            std::optional<std::uint64_t> prev;
            std::uint64_t rounds = 0;
            std::uint64_t half = 0;
            while (rounds < opts.max_iters) {
                Response rb = respond(a, c, k);
                if (opts.on_half_step) opts.on_half_step(r, half++, rb.count);
                Response rc = respond(a, rb.shore, k);
                if (opts.on_half_step) opts.on_half_step(r, half++, rc.count);
                b = std::move(rb.shore);
                c = std::move(rc.shore);
                count = rc.count;
                ++rounds;
                if (prev && count <= *prev) break;
                prev = count;
            }
            if (rounds == 0) {
                // max_iters = 0: score the random start against its best response only.
                Response rb = respond(a, c, k);
                b = std::move(rb.shore);
                count = rb.count;
            }
            outcomes[r] = Outcome{std::move(b), std::move(c), count, rounds};
        } catch (...) {
            errors[r] = std::current_exception();
        }
    };

    const auto restarts = static_cast<std::int64_t>(opts.restarts);
    if (opts.exec == kernels::Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t r = 0; r < restarts; ++r) run_restart(static_cast<std::uint64_t>(r));
    } else {
        for (std::int64_t r = 0; r < restarts; ++r) run_restart(static_cast<std::uint64_t>(r));
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::size_t best_idx = 0;
    std::uint64_t total_rounds = 0;
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        total_rounds += outcomes[r]->rounds;
        if (outcomes[r]->count > outcomes[best_idx]->count) best_idx = r;
    }
    Outcome& best = *outcomes[best_idx];
    MaximizeResult result{std::move(best.b), std::move(best.c), best.count, false, total_rounds, opts.restarts};
    self_check(a, result);
    return result;
}

}  // namespace mulab
