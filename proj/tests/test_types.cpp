#include <doctest.h>

#include "iftt/types.hpp"

using namespace iftt;

TEST_CASE("DigitSet") {
  DigitSet s{1, 3, 8};
  CHECK(s.size() == 3);
  CHECK(s.contains(Digit{3}));
  CHECK_FALSE(s.contains(Digit{2}));
  CHECK(s.front() == Digit{1});
  CHECK(s.toString() == "{1,3,8}");
  CHECK(s.values() == std::vector<int>{1, 3, 8});
  CHECK((s & DigitSet{3, 4}) == DigitSet{3});
  CHECK((s | DigitSet{0}) == DigitSet{0, 1, 3, 8});
  CHECK(s.without(DigitSet{1, 8}) == DigitSet{3});
  CHECK(DigitSet::range(10).size() == 10);
  CHECK(DigitSet{}.toString() == "{}");
  s.erase(Digit{3});
  CHECK(s == DigitSet{1, 8});
  CHECK_THROWS_AS(DigitSet({40}), DomainError);
  CHECK_THROWS_AS(DigitSet({-1}), DomainError);
}

TEST_CASE("ColorSet") {
  ColorSet c;
  CHECK(c.toString().empty());
  CHECK_FALSE(c.only().has_value());
  c.insert(Color::Gray);
  CHECK(c.only() == Color::Gray);
  CHECK(c.toString() == "G");
  c.insert(Color::Yellow);
  CHECK(c.size() == 2);
  CHECK(c.toString() == "YG");
  CHECK_FALSE(c.only().has_value());
}

TEST_CASE("ColorPattern") {
  auto p = ColorPattern::fromString("YYYYYGGGGG");
  CHECK(p.digitCount() == 10);
  CHECK(p.yellow() == DigitSet{0, 1, 2, 3, 4});
  CHECK(p.gray() == DigitSet{5, 6, 7, 8, 9});
  CHECK(p.color(Digit{7}) == Color::Gray);
  CHECK(p.balanced());
  CHECK(p.hasBothColors());
  CHECK(p.toString() == "YYYYYGGGGG");
  CHECK(p.digitsOf(Color::Yellow) == p.yellow());

  CHECK_FALSE(ColorPattern::fromString("YYYYYYGGGG").balanced());
  CHECK(ColorPattern::fromString("YYG").balanced());
  CHECK(ColorPattern::fromString("YGG").balanced());
  CHECK_FALSE(ColorPattern::fromString("YYYY").hasBothColors());

  CHECK_THROWS_AS(ColorPattern::fromString("YYXGG"), ParseError);
  CHECK_THROWS_AS(ColorPattern::fromString("Y"), ParseError);
  CHECK_THROWS_AS(ColorPattern(17, DigitSet{}), DomainError);
  CHECK_THROWS_AS(ColorPattern(4, DigitSet{5}), DomainError);
}

TEST_CASE("colors and modes round-trip through text") {
  CHECK(colorFromChar('Y') == Color::Yellow);
  CHECK(colorFromChar('G') == Color::Gray);
  CHECK_THROWS_AS(colorFromChar('B'), ParseError);
  CHECK(opposite(Color::Yellow) == Color::Gray);
  for (EntryMode m : {EntryMode::Trad, EntryMode::Roth, EntryMode::Iftt})
    CHECK(entryModeFromString(toString(m)) == m);
  CHECK_THROWS_AS(entryModeFromString("pin"), ParseError);
}

TEST_CASE("ButtonMapping commitments never change") {
  ButtonMapping m(3);
  CHECK(m.committedCount() == 0);
  m.commit(ButtonId{1}, Color::Gray);
  m.commit(ButtonId{1}, Color::Gray);
  CHECK(m.committedCount() == 1);
  CHECK(m.color(ButtonId{1}) == Color::Gray);
  CHECK_THROWS_AS(m.commit(ButtonId{1}, Color::Yellow), DomainError);
  CHECK(m.color(ButtonId{1}) == Color::Gray);
  CHECK_THROWS(m.commit(ButtonId{3}, Color::Yellow));

  auto full = ButtonMapping::fromColors({Color::Yellow, Color::Gray});
  CHECK(full.committedCount() == 2);
  CHECK(full.color(ButtonId{0}) == Color::Yellow);
}
