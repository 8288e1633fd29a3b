#include "mulab/sampler.hpp"

#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace mulab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
    return splitmix64(parent + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
    // Reject the low 2^64 mod bound outputs so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r = rng();
    while (r < threshold) r = rng();
    return r % bound;
}

namespace {

std::vector<std::uint64_t> distinct_draws(std::mt19937_64& rng, std::uint64_t n, std::uint64_t count) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count * 2);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    while (out.size() < count) {
        const auto v = uniform_below(rng, n);
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

}  // namespace

Subset sample_subset(const GroupSpec& g, std::uint64_t m, std::uint64_t seed, bool replacement) {
    const std::uint64_t n = g.order();
    if (m == 0) throw std::invalid_argument("sample size must be at least 1");
    std::mt19937_64 rng(seed);

    if (replacement) {
        std::vector<std::uint64_t> draws(m);
        for (auto& d : draws) d = uniform_below(rng, n);
        return Subset::from_indices(g, std::move(draws), SubsetMode::multiset);
    }
    if (m > n) throw std::invalid_argument("sample size exceeds group order without replacement");

    if (m <= n / 2) return Subset::from_indices(g, distinct_draws(rng, n, m));

    // Large m: draw the complement instead.
    const auto excluded = distinct_draws(rng, n, n - m);
    std::vector<bool> drop(n, false);
    for (auto v : excluded) drop[v] = true;
    std::vector<std::uint64_t> kept;
    kept.reserve(m);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (!drop[i]) kept.push_back(i);
    }
    return Subset::from_indices(g, std::move(kept));
}

}  // namespace mulab
