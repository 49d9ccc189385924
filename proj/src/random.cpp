#include "iftt/random.hpp"

namespace iftt {

std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t stream) {
  auto splitmix = [](std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  return splitmix(seed ^ splitmix(stream));
}

std::uint64_t drawBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~0ull - (~0ull % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace iftt
