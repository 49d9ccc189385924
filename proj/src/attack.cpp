#include "iftt/attack.hpp"

#include <algorithm>
#include <string>

#include "iftt/inference.hpp"

namespace iftt {

namespace {

constexpr DigitSet kAllDigits = DigitSet::range(kDefaultDigitCount);

void checkShape(const Transcript& t) {
  if (t.pinLength < 1) throw ParseError("pin_length must be at least 1");
  const int buttons = t.mode == EntryMode::Trad ? kDefaultDigitCount : t.buttonCount;
  if (t.mode == EntryMode::Roth && t.buttonCount != 2) throw ParseError("ROTH transcripts use 2 buttons");
  if (t.mode == EntryMode::Iftt && (t.buttonCount < 2 || t.buttonCount > kMaxButtonCount))
    throw ParseError("IFTT transcripts use 2 to 16 buttons");
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    const TranscriptEvent& e = t.events[i];
    if (e.button < 0 || e.button >= buttons) throw ParseError("event " + std::to_string(i) + " button out of range");
    if (t.mode == EntryMode::Trad) continue;
    if (!e.pattern || e.pattern->digitCount() != kDefaultDigitCount || !e.pattern->hasBothColors())
      throw ParseError("event " + std::to_string(i) + " lacks a valid 10-digit pattern");
  }
}

void pushResolved(std::vector<DigitSet>& out, Digit d, const Transcript& t) {
  if (static_cast<int>(out.size()) == t.pinLength)
    throw ParseError("transcript keeps going after all " + std::to_string(t.pinLength) + " digits resolved");
  DigitSet s;
  s.insert(d);
  out.push_back(s);
}

std::vector<DigitSet> decodeTrad(const Transcript& t) {
  std::vector<DigitSet> out;
  for (const TranscriptEvent& e : t.events) pushResolved(out, Digit{e.button}, t);
  return out;
}

std::vector<DigitSet> decodeRoth(const Transcript& t, DigitSet& open) {
  // Button 0 is yellow and button 1 gray for everyone.
  std::vector<DigitSet> out;
  open = kAllDigits;
  for (const TranscriptEvent& e : t.events) {
    open = open & e.pattern->digitsOf(e.button == 0 ? Color::Yellow : Color::Gray);
    if (open.size() == 1) {
      pushResolved(out, open.front(), t);
      open = kAllDigits;
    } else if (open.empty()) {
      open = kAllDigits;
    }
  }
  return out;
}

std::vector<DigitSet> decodeIftt(const Transcript& t, DigitSet& open) {
  std::vector<DigitSet> out;
  ButtonMapping recovered(t.buttonCount);
  DigitHypotheses h(kAllDigits, kDefaultDigitCount, t.buttonCount);
  int index = 0;
  for (const TranscriptEvent& e : t.events) {
    h.record(recovered, ClickEvent{ButtonId{e.button}, *e.pattern, index++});
    try {
      if (auto r = resolve(h)) {
        for (const auto& [b, c] : r->commitments) recovered.commit(b, c);
        pushResolved(out, r->digit, t);
        h = DigitHypotheses(kAllDigits, kDefaultDigitCount, t.buttonCount);
      }
    } catch (const InconsistentUser&) {
      h = DigitHypotheses(kAllDigits, kDefaultDigitCount, t.buttonCount);
    }
  }
  open = consistentDigits(h);
  return out;
}

}  // namespace

std::vector<DigitSet> decodeTranscript(const Transcript& t) {
  checkShape(t);
  std::vector<DigitSet> out;
  DigitSet open = kAllDigits;
  switch (t.mode) {
    case EntryMode::Trad:
      out = decodeTrad(t);
      break;
    case EntryMode::Roth:
      out = decodeRoth(t, open);
      break;
    case EntryMode::Iftt:
      out = decodeIftt(t, open);
      break;
  }
  if (static_cast<int>(out.size()) < t.pinLength) out.push_back(open);
  while (static_cast<int>(out.size()) < t.pinLength) out.push_back(kAllDigits);
  return out;
}

bool fullyDecoded(const std::vector<DigitSet>& positions) {
  return std::all_of(positions.begin(), positions.end(), [](DigitSet s) { return s.size() == 1; });
}

}  // namespace iftt
