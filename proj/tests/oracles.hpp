#pragma once

// Test-only reference computations. They work from decoded coordinates and the
// textbook definitions, sharing no code with the library's transform or counting paths.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "mulab/group.hpp"
#include "mulab/subset.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline std::vector<std::vector<std::uint64_t>> all_coords(const mulab::GroupSpec& g) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> digits(g.rank(), 0);
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        out.push_back(digits);
        for (std::size_t j = g.rank(); j-- > 0;) {
            if (++digits[j] < g.factors()[j]) break;
            digits[j] = 0;
        }
    }
    return out;
}

inline cplx chi(const mulab::GroupSpec& g, const std::vector<std::uint64_t>& t, const std::vector<std::uint64_t>& x) {
    double phase = 0.0;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        phase += static_cast<double>((t[j] * x[j]) % g.factors()[j]) / static_cast<double>(g.factors()[j]);
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

/// f^(t) = (1/N) sum_x f(x) conj(chi_t(x)), O(N^2).
inline std::vector<cplx> dft(const mulab::GroupSpec& g, const std::vector<cplx>& f) {
    const auto coords = all_coords(g);
    const double n = static_cast<double>(g.order());
    std::vector<cplx> out(g.order());
    for (std::uint64_t t = 0; t < g.order(); ++t) {
        cplx acc{};
        for (std::uint64_t x = 0; x < g.order(); ++x) acc += f[x] * std::conj(chi(g, coords[t], coords[x]));
        out[t] = acc / n;
    }
    return out;
}

inline std::vector<cplx> dft(const mulab::GroupSpec& g, const std::vector<double>& f) {
    return dft(g, std::vector<cplx>(f.begin(), f.end()));
}

/// #{(a, b, c) : a = b + c} with multiplicities, by triple enumeration on coordinates.
inline std::uint64_t mu(const mulab::Subset& a, const mulab::Subset& b, const mulab::Subset& c) {
    const auto& g = a.group();
    const auto coords = all_coords(g);
    const auto ea = a.expanded();
    const auto eb = b.expanded();
    const auto ec = c.expanded();
    std::uint64_t count = 0;
    for (auto x : ea) {
        for (auto y : eb) {
            for (auto z : ec) {
                bool ok = true;
                for (std::size_t j = 0; j < g.rank() && ok; ++j) {
                    ok = (coords[y][j] + coords[z][j]) % g.factors()[j] == coords[x][j];
                }
                count += ok ? 1 : 0;
            }
        }
    }
    return count;
}

/// All size-k subsets of [0, n) as index lists.
inline std::vector<std::vector<std::uint64_t>> combinations(std::uint64_t n, std::uint64_t k) {
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::uint64_t>(std::popcount(mask)) != k) continue;
        std::vector<std::uint64_t> s;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) s.push_back(i);
        }
        out.push_back(std::move(s));
    }
    return out;
}

/// max over all (B, C) with |B| = |C| = k of mu(A, B, C), by enumerating both shores.
inline std::uint64_t brute_max(const mulab::Subset& a, std::uint64_t k) {
    const auto& g = a.group();
    const auto shores = combinations(g.order(), k);
    std::uint64_t best = 0;
    for (const auto& bs : shores) {
        const auto b = mulab::Subset::from_indices(g, bs);
        for (const auto& cs : shores) {
            best = std::max(best, mu(a, b, mulab::Subset::from_indices(g, cs)));
        }
    }
    return best;
}

inline mulab::Subset random_subset(const mulab::GroupSpec& g, std::mt19937_64& rng, double density = 0.5) {
    std::bernoulli_distribution keep(density);
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        if (keep(rng)) idx.push_back(i);
    }
    return mulab::Subset::from_indices(g, std::move(idx));
}

inline mulab::Subset random_subset_of_size(const mulab::GroupSpec& g, std::mt19937_64& rng, std::uint64_t m) {
    std::vector<std::uint64_t> all(g.order());
    for (std::uint64_t i = 0; i < all.size(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(m);
    return mulab::Subset::from_indices(g, std::move(all));
}

inline std::vector<double> random_function(std::uint64_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> f(n);
    for (auto& v : f) v = u(rng);
    return f;
}

}  // namespace oracle
