#include "iftt/planner.hpp"

#include "iftt/random.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace iftt {

namespace {

// Spreads the low bits of `k` over `members`.
DigitSet expand(std::uint32_t k, const std::vector<Digit>& members) {
  DigitSet out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if ((k >> i) & 1u) out.insert(members[i]);
  }
  return out;
}

struct Layout {
  int digitCount;
  int yellowTarget;  // used only when balanced
  bool balance;
  int candidateCount;

  bool feasible(int yellowCandidates) const {
    int grayCandidates = candidateCount - yellowCandidates;
    if (balance) return yellowCandidates <= yellowTarget && grayCandidates <= digitCount - yellowTarget;
    // Without padding digits a single-color candidate coloring is a single-color pattern.
    if (candidateCount == digitCount) return yellowCandidates > 0 && grayCandidates > 0;
    return true;
  }
};

using Score = std::tuple<int, int, int>;

ColorPattern pad(const Layout& layout, DigitSet candidates, DigitSet yellowCandidates, std::mt19937_64& rng) {
  std::vector<Digit> others;
  for (Digit d : DigitSet::range(layout.digitCount).without(candidates)) others.push_back(d);
  DigitSet yellow = yellowCandidates;
  if (layout.balance) {
    for (std::size_t i = others.size(); i > 1; --i) std::swap(others[i - 1], others[drawBelow(rng, i)]);
    int missing = layout.yellowTarget - yellowCandidates.size();
    for (int i = 0; i < missing; ++i) yellow.insert(others[static_cast<std::size_t>(i)]);
    return ColorPattern(layout.digitCount, yellow);
  }
  for (Digit d : others) {
    if (rng() & 1u) yellow.insert(d);
  }
  ColorPattern p(layout.digitCount, yellow);
  if (!p.hasBothColors()) {
    // Only reachable when every candidate shares one color; flip one padding digit.
    Digit flip = others[drawBelow(rng, others.size())];
    if (yellow.contains(flip)) {
      yellow.erase(flip);
    } else {
      yellow.insert(flip);
    }
    p = ColorPattern(layout.digitCount, yellow);
  }
  return p;
}

// Enumerates feasible candidate colorings, keeps the lowest score and draws one of the ties.
template <typename ScoreFn>
ColorPattern planWith(DigitSet candidates, int digitCount, bool balance, std::uint64_t seed, std::uint64_t step,
                      ScoreFn&& score) {
  if (digitCount < 2 || digitCount > kMaxDigitCount)
    throw DomainError("digit domain size must be in [2, 16], got " + std::to_string(digitCount));
  if (!candidates.without(DigitSet::range(digitCount)).empty())
    throw DomainError("candidates outside the digit domain: " + candidates.toString());
  if (candidates.size() < 2)
    throw DomainError("a pattern needs at least two candidate digits, got " + candidates.toString());

  std::vector<Digit> members(candidates.begin(), candidates.end());
  const Layout layout{digitCount, digitCount / 2, balance, candidates.size()};

  std::vector<DigitSet> ties;
  Score best{};
  const std::uint32_t combos = 1u << members.size();
  for (std::uint32_t k = 0; k < combos; ++k) {
    DigitSet yellow = expand(k, members);
    if (!layout.feasible(yellow.size())) continue;
    Score s = score(yellow);
    if (ties.empty() || s < best) {
      best = s;
      ties.clear();
    }
    if (s == best) ties.push_back(yellow);
  }

  std::mt19937_64 rng(mixSeed(seed, step));
  DigitSet chosen = ties[drawBelow(rng, ties.size())];
  return pad(layout, candidates, chosen, rng);
}

int imbalance(DigitSet yellow, DigitSet candidates) {
  return std::abs(2 * yellow.size() - candidates.size());
}

}  // namespace

ColorPattern rothSchedule(std::uint64_t step, DigitSet candidates, std::uint64_t seed, int digitCount, bool balance) {
  return planWith(candidates, digitCount, balance, seed, step,
                  [&](DigitSet yellow) { return Score{0, 0, imbalance(yellow, candidates)}; });
}

ColorPattern nextPattern(const PlannerConfig& cfg, DigitSet candidates, std::span<const ClickEvent> history,
                         const ButtonMapping& known, std::uint64_t step) {
  if (cfg.mode == EntryMode::Roth) return rothSchedule(step, candidates, cfg.seed, cfg.digitCount, cfg.balance);
  if (cfg.mode != EntryMode::Iftt) throw DomainError("TRAD entry shows no pattern");

  const int buttonCount = known.buttonCount();
  if (buttonCount < 1) throw DomainError("button mapping is empty");

  // predicted[b][c]: candidates under which button b already means color c.
  std::array<std::array<DigitSet, 2>, kMaxButtonCount> predicted{};
  std::array<ColorSet, kMaxButtonCount * kMaxDigitCount> seen{};
  for (const ClickEvent& e : history) {
    if (e.button.index < 0 || e.button.index >= buttonCount)
      throw DomainError("history button out of range: " + std::to_string(e.button.index));
    for (Digit d : candidates) seen[static_cast<std::size_t>(e.button.index * kMaxDigitCount + d.value)].insert(e.pattern.color(d));
  }
  bool freshButton = false;
  for (int b = 0; b < buttonCount; ++b) {
    auto& pb = predicted[static_cast<std::size_t>(b)];
    if (auto c = known.color(ButtonId{b})) {
      pb[static_cast<std::size_t>(*c)] = candidates;
      continue;
    }
    for (Digit d : candidates) {
      if (auto c = seen[static_cast<std::size_t>(b * kMaxDigitCount + d.value)].only())
        pb[static_cast<std::size_t>(*c)].insert(d);
    }
    if (pb[0].empty() && pb[1].empty()) freshButton = true;
  }

  std::vector<int> active;
  for (int b = 0; b < buttonCount; ++b) {
    const auto& pb = predicted[static_cast<std::size_t>(b)];
    if (!pb[0].empty() || !pb[1].empty()) active.push_back(b);
  }

  const int all = candidates.size();
  auto score = [&](DigitSet yellow) {
    DigitSet gray = candidates.without(yellow);
    std::array<int, kMaxButtonCount> survivors{};
    for (int b : active) {
      const auto& pb = predicted[static_cast<std::size_t>(b)];
      survivors[static_cast<std::size_t>(b)] = ((yellow & pb[0]) | (gray & pb[1])).size();
    }
    int total = 0;
    int worst = 0;
    for (Digit d : candidates) {
      const std::size_t c = yellow.contains(d) ? 0 : 1;
      int outcome = -1;
      for (int b : active) {
        if (predicted[static_cast<std::size_t>(b)][c].contains(d))
          outcome = std::max(outcome, survivors[static_cast<std::size_t>(b)]);
      }
      // No button carries this color under d: a fresh button teaches nothing,
      // and with none left d cannot be the digit being entered.
      if (outcome < 0) outcome = freshButton ? all : 0;
      total += outcome;
      worst = std::max(worst, outcome);
    }
    return Score{total, worst, imbalance(yellow, candidates)};
  };

  return planWith(candidates, cfg.digitCount, cfg.balance, cfg.seed, step, score);
}

}  // namespace iftt
