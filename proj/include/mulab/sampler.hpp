#pragma once

// Seeding scheme: a 64-bit seed drives a std::mt19937_64 stream; child seeds are
// derived with derive_seed(parent, index), a SplitMix64 finalizer over
// parent + (index + 1) * 0x9e3779b97f4a7c15. Bounded draws use rejection on the raw
// 64-bit output, so results do not depend on the standard library's distributions.

#include <cstdint>
#include <random>

#include "mulab/group.hpp"
#include "mulab/subset.hpp"

namespace mulab {

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept;

/// Uniform integer in [0, bound); bound > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Without replacement: a uniform m-subset (1 <= m <= N). With replacement: m independent uniform draws.
/// Throws std::invalid_argument on m = 0 or m > N without replacement.
Subset sample_subset(const GroupSpec& g, std::uint64_t m, std::uint64_t seed, bool replacement);

}  // namespace mulab
