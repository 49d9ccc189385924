#include "iftt/inference.hpp"

#include <string>

namespace iftt {

DigitHypotheses::DigitHypotheses(DigitSet candidates, int digitCount, int buttonCount)
    : digitCount_(digitCount), buttonCount_(buttonCount), initial_(candidates), surviving_(candidates) {
  if (digitCount < 2 || digitCount > kMaxDigitCount)
    throw DomainError("digit domain size must be in [2, 16], got " + std::to_string(digitCount));
  if (buttonCount < 1 || buttonCount > kMaxButtonCount)
    throw DomainError("button count must be in [1, 16], got " + std::to_string(buttonCount));
  if (candidates.empty()) throw DomainError("candidate set is empty");
  if (!candidates.without(DigitSet::range(digitCount)).empty())
    throw DomainError("candidates outside the digit domain: " + candidates.toString());
  observed_.resize(static_cast<std::size_t>(digitCount * buttonCount));
}

bool DigitHypotheses::consistent(Digit d) const {
  if (!surviving_.contains(d)) return false;
  for (int b = 0; b < buttonCount_; ++b) {
    if (observed_[slot(d, ButtonId{b})].size() > 1) return false;
  }
  return true;
}

void DigitHypotheses::record(const ButtonMapping& known, const ClickEvent& e) {
  if (e.button.index < 0 || e.button.index >= buttonCount_)
    throw DomainError("button out of range: " + std::to_string(e.button.index));
  if (e.pattern.digitCount() != digitCount_)
    throw DomainError("pattern covers " + std::to_string(e.pattern.digitCount()) + " digits, expected " +
                      std::to_string(digitCount_));
  if (!e.pattern.hasBothColors()) throw DomainError("pattern must show both colors: " + e.pattern.toString());

  if (e.button.index < known.buttonCount()) {
    if (auto committed = known.color(e.button)) surviving_ = surviving_ & e.pattern.digitsOf(*committed);
  }
  for (Digit d : surviving_) observed_[slot(d, e.button)].insert(e.pattern.color(d));
  ++clicks_;
}

DigitHypotheses newDigitInference(DigitSet candidates, const ButtonMapping& known, int digitCount) {
  return DigitHypotheses(candidates, digitCount, known.buttonCount());
}

DigitHypotheses recordClick(DigitHypotheses h, const ButtonMapping& known, const ClickEvent& e) {
  h.record(known, e);
  return h;
}

DigitSet consistentDigits(const DigitHypotheses& h) {
  DigitSet out;
  for (Digit d : h.surviving()) {
    if (h.consistent(d)) out.insert(d);
  }
  return out;
}

std::optional<Resolution> resolve(const DigitHypotheses& h) {
  DigitSet live = consistentDigits(h);
  if (live.empty())
    throw InconsistentUser("no digit is consistent after " + std::to_string(h.clicks()) + " clicks");
  if (live.size() != 1) return std::nullopt;

  Resolution r{live.front(), {}};
  for (int b = 0; b < h.buttonCount(); ++b) {
    if (auto c = h.observed(r.digit, ButtonId{b}).only()) r.commitments.emplace_back(ButtonId{b}, *c);
  }
  return r;
}

}  // namespace iftt
