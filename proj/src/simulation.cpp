#include "iftt/simulation.hpp"

#include <algorithm>

#include "iftt/random.hpp"

namespace iftt {

std::string_view toString(ButtonChoice c) {
  switch (c) {
    case ButtonChoice::Lazy:
      return "lazy";
    case ButtonChoice::UniformRandom:
      return "uniform";
    case ButtonChoice::Subset:
      return "subset";
  }
  return "?";
}

ButtonChoice buttonChoiceFromString(std::string_view text) {
  if (text == "lazy") return ButtonChoice::Lazy;
  if (text == "uniform") return ButtonChoice::UniformRandom;
  if (text == "subset") return ButtonChoice::Subset;
  throw ParseError("unknown button policy '" + std::string(text) + "'");
}

namespace {

std::vector<ButtonId> buttonsOf(const std::vector<Color>& mapping, Color c) {
  std::vector<ButtonId> out;
  for (std::size_t b = 0; b < mapping.size(); ++b) {
    if (mapping[b] == c) out.push_back(ButtonId{static_cast<int>(b)});
  }
  return out;
}

ButtonId pick(const std::vector<ButtonId>& from, std::mt19937_64& rng) { return from[drawBelow(rng, from.size())]; }

}  // namespace

SimulatedUser::SimulatedUser(UserPolicy policy) : policy_(std::move(policy)), rng_(mixSeed(policy_.seed, 0x5eed)) {
  const auto& mapping = policy_.privateMapping;
  auto yellow = buttonsOf(mapping, Color::Yellow);
  auto gray = buttonsOf(mapping, Color::Gray);
  if (yellow.empty() || gray.empty())
    throw DomainError("a private mapping needs at least one yellow and one gray button");

  switch (policy_.choice) {
    case ButtonChoice::Lazy:
      reachable_ = {pick(yellow, rng_), pick(gray, rng_)};
      break;
    case ButtonChoice::UniformRandom:
      for (std::size_t b = 0; b < mapping.size(); ++b) reachable_.push_back(ButtonId{static_cast<int>(b)});
      break;
    case ButtonChoice::Subset: {
      const int k = policy_.subsetSize;
      if (k < 2 || k > static_cast<int>(mapping.size()))
        throw DomainError("subset size must be in [2, button count], got " + std::to_string(k));
      reachable_ = {pick(yellow, rng_), pick(gray, rng_)};
      std::vector<ButtonId> rest;
      for (std::size_t b = 0; b < mapping.size(); ++b) {
        ButtonId id{static_cast<int>(b)};
        if (std::find(reachable_.begin(), reachable_.end(), id) == reachable_.end()) rest.push_back(id);
      }
      for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[drawBelow(rng_, i)]);
      reachable_.insert(reachable_.end(), rest.begin(), rest.begin() + (k - 2));
      break;
    }
  }
  std::sort(reachable_.begin(), reachable_.end());
}

ButtonId SimulatedUser::choose(const ColorPattern& shown, Digit target) {
  const Color meant = shown.color(target);
  std::vector<ButtonId> matching;
  for (ButtonId b : reachable_) {
    if (policy_.privateMapping[static_cast<std::size_t>(b.index)] == meant) matching.push_back(b);
  }
  return pick(matching, rng_);
}

std::vector<Color> MappingEnumeration::iterator::operator*() const {
  std::vector<Color> out(static_cast<std::size_t>(buttons_));
  for (int b = 0; b < buttons_; ++b) out[static_cast<std::size_t>(b)] = ((mask_ >> b) & 1u) ? Color::Yellow : Color::Gray;
  return out;
}

MappingEnumeration::MappingEnumeration(int buttonCount) : buttons_(buttonCount) {
  if (buttonCount < 1 || buttonCount > 62)
    throw DomainError("button count must be in [1, 62], got " + std::to_string(buttonCount));
  last_ = (1ull << buttonCount) - 2;
}

MappingEnumeration enumerateMappings(int buttonCount) { return MappingEnumeration(buttonCount); }

std::vector<Color> randomMapping(int buttonCount, std::mt19937_64& rng) {
  MappingEnumeration all(buttonCount);
  if (all.size() == 0) throw DomainError("no valid mapping exists for a single button");
  return *MappingEnumeration::iterator(buttonCount, 1 + drawBelow(rng, all.size()));
}

std::vector<Digit> parsePin(std::string_view pin) {
  if (pin.empty()) throw DomainError("PIN is empty");
  std::vector<Digit> out;
  for (char c : pin) {
    if (c < '0' || c > '9') throw DomainError("PIN must contain digits only: '" + std::string(pin) + "'");
    out.push_back(Digit{c - '0'});
  }
  return out;
}

SimulationRun simulateSession(const UserPolicy& policy, EntryMode mode, int pinLength, std::string_view pin,
                              std::uint64_t seed, SessionOptions options) {
  const std::vector<Digit> digits = parsePin(pin);
  if (static_cast<int>(digits.size()) != pinLength)
    throw DomainError("PIN '" + std::string(pin) + "' does not have length " + std::to_string(pinLength));

  UserPolicy effective = policy;
  if (mode == EntryMode::Roth) {
    effective.privateMapping = {Color::Yellow, Color::Gray};
    effective.choice = ButtonChoice::UniformRandom;
  }
  const int buttonCount = mode == EntryMode::Iftt ? static_cast<int>(effective.privateMapping.size())
                                                  : (mode == EntryMode::Roth ? 2 : kTradButtonCount);

  PinSession session = PinSession::start(mode, pinLength, buttonCount, seed, std::move(options));
  std::optional<SimulatedUser> user;
  if (mode != EntryMode::Trad) user.emplace(effective);

  while (session.status() == SessionStatus::Active) {
    const Digit target = digits[session.resolvedDigits().size()];
    if (mode == EntryMode::Trad) {
      session.press(ButtonId{target.value});
    } else {
      session.press(user->choose(*session.currentPattern(), target));
    }
  }
  return SimulationRun{session.transcript(), session.clicksPerPosition(), session.mapping(), session.incidents()};
}

}  // namespace iftt
