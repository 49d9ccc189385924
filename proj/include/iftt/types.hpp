#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iftt {

inline constexpr int kDefaultDigitCount = 10;
inline constexpr int kDefaultButtonCount = 9;
inline constexpr int kMaxDigitCount = 16;
inline constexpr int kMaxButtonCount = 16;

// Precondition or argument outside the supported domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No interpretation hypothesis is consistent with the observed presses.
class InconsistentUser : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed transcript or pattern text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Color : std::uint8_t { Yellow = 0, Gray = 1 };

// TRAD: direct keypad. ROTH: two buttons with known colors. IFTT: buttons
// with colors the user chose privately.
enum class EntryMode : std::uint8_t { Trad, Roth, Iftt };

// "trad", "roth", "iftt"
std::string_view toString(EntryMode m);
EntryMode entryModeFromString(std::string_view text);

constexpr Color opposite(Color c) { return c == Color::Yellow ? Color::Gray : Color::Yellow; }
constexpr char toChar(Color c) { return c == Color::Yellow ? 'Y' : 'G'; }
Color colorFromChar(char c);

struct Digit {
  int value = 0;
  friend constexpr auto operator<=>(Digit, Digit) = default;
};

struct ButtonId {
  int index = 0;
  friend constexpr auto operator<=>(ButtonId, ButtonId) = default;
};

// Subset of the digit domain, stored as a bitmask.
class DigitSet {
 public:
  constexpr DigitSet() = default;
  constexpr explicit DigitSet(std::uint32_t bits) : bits_(bits) {}
  DigitSet(std::initializer_list<int> digits);

  static constexpr DigitSet range(int count) {
    return DigitSet(count >= 32 ? ~0u : ((1u << count) - 1u));
  }

  constexpr bool contains(Digit d) const { return (bits_ >> d.value) & 1u; }
  constexpr void insert(Digit d) { bits_ |= 1u << d.value; }
  constexpr void erase(Digit d) { bits_ &= ~(1u << d.value); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  // Lowest member; only meaningful when non-empty.
  constexpr Digit front() const { return Digit{std::countr_zero(bits_)}; }

  constexpr DigitSet operator&(DigitSet o) const { return DigitSet(bits_ & o.bits_); }
  constexpr DigitSet operator|(DigitSet o) const { return DigitSet(bits_ | o.bits_); }
  constexpr DigitSet without(DigitSet o) const { return DigitSet(bits_ & ~o.bits_); }
  friend constexpr bool operator==(DigitSet, DigitSet) = default;

  class iterator {
   public:
    using value_type = Digit;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr Digit operator*() const { return Digit{std::countr_zero(rest_)}; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1u;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> values() const;
  // "{1,3,8}"
  std::string toString() const;

 private:
  std::uint32_t bits_ = 0;
};

// Set of colors observed for one (digit, button) pair: cardinality 0, 1 or 2.
class ColorSet {
 public:
  constexpr void insert(Color c) { bits_ |= bit(c); }
  constexpr bool contains(Color c) const { return bits_ & bit(c); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // The single color, when size() == 1.
  constexpr std::optional<Color> only() const {
    if (bits_ == 1u) return Color::Yellow;
    if (bits_ == 2u) return Color::Gray;
    return std::nullopt;
  }
  // "", "Y", "G" or "YG"
  std::string toString() const;
  friend constexpr bool operator==(ColorSet, ColorSet) = default;

 private:
  static constexpr std::uint8_t bit(Color c) { return c == Color::Yellow ? 1u : 2u; }
  std::uint8_t bits_ = 0;
};

// Yellow/gray assignment over the digit grid for one iteration.
class ColorPattern {
 public:
  ColorPattern() = default;
  ColorPattern(int digitCount, DigitSet yellow);

  static ColorPattern fromString(std::string_view text);

  int digitCount() const { return digitCount_; }
  Color color(Digit d) const { return yellow_.contains(d) ? Color::Yellow : Color::Gray; }
  DigitSet yellow() const { return yellow_; }
  DigitSet gray() const { return DigitSet::range(digitCount_).without(yellow_); }
  DigitSet digitsOf(Color c) const { return c == Color::Yellow ? yellow() : gray(); }

  bool hasBothColors() const;
  // Even domain: exactly half of each color. Odd domain: counts differ by one.
  bool balanced() const;

  std::string toString() const;
  friend bool operator==(const ColorPattern&, const ColorPattern&) = default;

 private:
  int digitCount_ = 0;
  DigitSet yellow_;
};

struct ClickEvent {
  ButtonId button;
  ColorPattern pattern;
  int index = 0;
  friend bool operator==(const ClickEvent&, const ClickEvent&) = default;
};

// Per-button color commitments. A committed color is never changed.
class ButtonMapping {
 public:
  ButtonMapping() = default;
  explicit ButtonMapping(int buttonCount);
  static ButtonMapping fromColors(const std::vector<Color>& colors);

  int buttonCount() const { return static_cast<int>(colors_.size()); }
  std::optional<Color> color(ButtonId b) const { return colors_.at(static_cast<std::size_t>(b.index)); }
  bool committed(ButtonId b) const { return color(b).has_value(); }
  int committedCount() const;

  // Idempotent for the same color; throws DomainError on a conflicting color.
  void commit(ButtonId b, Color c);

  friend bool operator==(const ButtonMapping&, const ButtonMapping&) = default;

 private:
  std::vector<std::optional<Color>> colors_;
};

}  // namespace iftt
