#pragma once

#include <cstdint>
#include <span>

#include "iftt/types.hpp"

namespace iftt {

struct PlannerConfig {
  EntryMode mode = EntryMode::Iftt;
  std::uint64_t seed = 0;
  bool balance = true;
  int digitCount = kDefaultDigitCount;
};

/// Picks the pattern shown before the next click.
///
/// `history` holds the clicks of the digit currently being entered, `known`
/// the committed button colors and `step` the session-wide click index (it
/// selects the random stream, so equal inputs always give equal patterns).
///
/// In IFTT mode every candidate digit is treated as a possible truth. Under
/// hypothesis d the user is expected to reuse a button that already means d's
/// current color, or to reach for a fresh button otherwise. The candidate
/// coloring minimizing the expected number of surviving candidates wins, then
/// the worst case, then the most even split; remaining ties are broken with
/// the seeded generator. With every button committed this is exactly the
/// even split used by ROTH.
///
/// Non-candidate digits pad the pattern to |D|/2 yellow digits when
/// `cfg.balance` is set. Throws DomainError for fewer than two candidates.
ColorPattern nextPattern(const PlannerConfig& cfg, DigitSet candidates, std::span<const ClickEvent> history,
                         const ButtonMapping& known, std::uint64_t step);

// Seeded even split of the candidates, independent of any click history.
ColorPattern rothSchedule(std::uint64_t step, DigitSet candidates, std::uint64_t seed,
                          int digitCount = kDefaultDigitCount, bool balance = true);

}  // namespace iftt
