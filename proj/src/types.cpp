#include "iftt/types.hpp"

#include <algorithm>
#include <sstream>

namespace iftt {

Color colorFromChar(char c) {
  switch (c) {
    case 'Y':
      return Color::Yellow;
    case 'G':
      return Color::Gray;
    default:
      throw ParseError(std::string("invalid color character '") + c + "'");
  }
}

std::string_view toString(EntryMode m) {
  switch (m) {
    case EntryMode::Trad:
      return "trad";
    case EntryMode::Roth:
      return "roth";
    case EntryMode::Iftt:
      return "iftt";
  }
  return "?";
}

EntryMode entryModeFromString(std::string_view text) {
  if (text == "trad") return EntryMode::Trad;
  if (text == "roth") return EntryMode::Roth;
  if (text == "iftt") return EntryMode::Iftt;
  throw ParseError("unknown mode '" + std::string(text) + "'");
}

DigitSet::DigitSet(std::initializer_list<int> digits) {
  for (int d : digits) {
    if (d < 0 || d >= kMaxDigitCount) throw DomainError("digit out of range: " + std::to_string(d));
    insert(Digit{d});
  }
}

std::vector<int> DigitSet::values() const {
  std::vector<int> out;
  for (Digit d : *this) out.push_back(d.value);
  return out;
}

std::string DigitSet::toString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Digit d : *this) {
    if (!first) os << ',';
    os << d.value;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string ColorSet::toString() const {
  std::string s;
  if (contains(Color::Yellow)) s += 'Y';
  if (contains(Color::Gray)) s += 'G';
  return s;
}

ColorPattern::ColorPattern(int digitCount, DigitSet yellow) : digitCount_(digitCount), yellow_(yellow) {
  if (digitCount < 2 || digitCount > kMaxDigitCount)
    throw DomainError("digit domain size must be in [2, 16], got " + std::to_string(digitCount));
  if (!yellow.without(DigitSet::range(digitCount)).empty())
    throw DomainError("yellow digits outside the domain: " + yellow.toString());
}

ColorPattern ColorPattern::fromString(std::string_view text) {
  if (text.size() < 2 || text.size() > static_cast<std::size_t>(kMaxDigitCount))
    throw ParseError("pattern length must be in [2, 16], got " + std::to_string(text.size()));
  DigitSet yellow;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (colorFromChar(text[i]) == Color::Yellow) yellow.insert(Digit{static_cast<int>(i)});
  }
  return ColorPattern(static_cast<int>(text.size()), yellow);
}

bool ColorPattern::hasBothColors() const {
  int y = yellow_.size();
  return y > 0 && y < digitCount_;
}

bool ColorPattern::balanced() const {
  int y = yellow_.size();
  int g = digitCount_ - y;
  return std::abs(y - g) == digitCount_ % 2;
}

std::string ColorPattern::toString() const {
  std::string s(static_cast<std::size_t>(digitCount_), 'G');
  for (Digit d : yellow_) s[static_cast<std::size_t>(d.value)] = 'Y';
  return s;
}

ButtonMapping::ButtonMapping(int buttonCount) {
  if (buttonCount < 1 || buttonCount > kMaxButtonCount)
    throw DomainError("button count must be in [1, 16], got " + std::to_string(buttonCount));
  colors_.resize(static_cast<std::size_t>(buttonCount));
}

ButtonMapping ButtonMapping::fromColors(const std::vector<Color>& colors) {
  ButtonMapping m(static_cast<int>(colors.size()));
  for (std::size_t i = 0; i < colors.size(); ++i) m.colors_[i] = colors[i];
  return m;
}

int ButtonMapping::committedCount() const {
  return static_cast<int>(std::count_if(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); }));
}

void ButtonMapping::commit(ButtonId b, Color c) {
  if (b.index < 0 || b.index >= buttonCount())
    throw DomainError("button out of range: " + std::to_string(b.index));
  auto& slot = colors_[static_cast<std::size_t>(b.index)];
  if (slot && *slot != c)
    throw DomainError("button " + std::to_string(b.index) + " already committed to " + toChar(*slot));
  slot = c;
}

}  // namespace iftt
