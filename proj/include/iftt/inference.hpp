#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iftt/types.hpp"

namespace iftt {

/// Interpretation hypotheses for one digit being entered.
///
/// For every candidate digit d the structure keeps, per button b, the set of
/// colors the user would have meant by pressing b if they were entering d.
/// A digit whose sets ever hold both colors for one button is inconsistent.
/// Presses on buttons whose color is already committed additionally remove
/// every candidate that was not shown in that color.
class DigitHypotheses {
 public:
  DigitHypotheses(DigitSet candidates, int digitCount, int buttonCount);

  int digitCount() const { return digitCount_; }
  int buttonCount() const { return buttonCount_; }
  // Clicks ingested so far.
  int clicks() const { return clicks_; }

  DigitSet initialCandidates() const { return initial_; }
  // Candidates not removed by a committed-button press.
  DigitSet surviving() const { return surviving_; }
  DigitSet eliminatedByKnown() const { return initial_.without(surviving_); }

  ColorSet observed(Digit d, ButtonId b) const { return observed_[slot(d, b)]; }
  bool consistent(Digit d) const;

  void record(const ButtonMapping& known, const ClickEvent& e);

  friend bool operator==(const DigitHypotheses&, const DigitHypotheses&) = default;

 private:
  std::size_t slot(Digit d, ButtonId b) const {
    return static_cast<std::size_t>(d.value * buttonCount_ + b.index);
  }

  int digitCount_;
  int buttonCount_;
  int clicks_ = 0;
  DigitSet initial_;
  DigitSet surviving_;
  std::vector<ColorSet> observed_;
};

struct Resolution {
  Digit digit;
  // Color meant by every button pressed while entering this digit.
  std::vector<std::pair<ButtonId, Color>> commitments;
};

DigitHypotheses newDigitInference(DigitSet candidates, const ButtonMapping& known,
                                  int digitCount = kDefaultDigitCount);

DigitHypotheses recordClick(DigitHypotheses h, const ButtonMapping& known, const ClickEvent& e);

DigitSet consistentDigits(const DigitHypotheses& h);

// Throws InconsistentUser when no candidate is left.
std::optional<Resolution> resolve(const DigitHypotheses& h);

}  // namespace iftt
