#pragma once

#include <cstdint>
#include <random>

namespace iftt {

// splitmix64 finalizer over (seed, stream); derives independent seeds.
std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t stream);

// Unbiased draw in [0, bound). std::uniform_int_distribution is not portable
// across standard libraries and seeded output must be.
std::uint64_t drawBelow(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace iftt
