#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "iftt/session.hpp"
#include "iftt/types.hpp"

namespace iftt {

enum class ButtonChoice : std::uint8_t {
  Lazy,           // one fixed button per color
  UniformRandom,  // any button of the matching color
  Subset,         // matching buttons within a fixed subset of k buttons
};

std::string_view toString(ButtonChoice c);
ButtonChoice buttonChoiceFromString(std::string_view text);

struct UserPolicy {
  std::vector<Color> privateMapping;
  ButtonChoice choice = ButtonChoice::Lazy;
  int subsetSize = 3;
  std::uint64_t seed = 0;
};

// A consistent user: always presses a button whose private color matches the
// target digit's current color.
class SimulatedUser {
 public:
  explicit SimulatedUser(UserPolicy policy);

  ButtonId choose(const ColorPattern& shown, Digit target);

  const UserPolicy& policy() const { return policy_; }
  // Buttons this user will ever press.
  const std::vector<ButtonId>& reachableButtons() const { return reachable_; }

 private:
  UserPolicy policy_;
  std::mt19937_64 rng_;
  std::vector<ButtonId> reachable_;
};

/// All button-to-color mappings with at least one button of each color, in
/// increasing bitmask order (bit b set means button b is yellow).
class MappingEnumeration {
 public:
  explicit MappingEnumeration(int buttonCount);

  std::uint64_t size() const { return last_ >= 1 ? last_ : 0; }

  class iterator {
   public:
    using value_type = std::vector<Color>;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(int buttons, std::uint64_t mask) : buttons_(buttons), mask_(mask) {}
    value_type operator*() const;
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++mask_;
      return copy;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    int buttons_ = 0;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {buttons_, 1}; }
  iterator end() const { return {buttons_, std::max<std::uint64_t>(last_ + 1, 1)}; }

 private:
  int buttons_;
  std::uint64_t last_;  // 2^N - 2
};

MappingEnumeration enumerateMappings(int buttonCount);

// Uniformly drawn valid mapping.
std::vector<Color> randomMapping(int buttonCount, std::mt19937_64& rng);

std::vector<Digit> parsePin(std::string_view pin);

struct SimulationRun {
  Transcript transcript;
  std::vector<int> clicksPerPosition;
  ButtonMapping committed;
  std::vector<std::string> incidents;
};

/// Drives a fresh session with a simulated user until it completes or aborts.
/// ROTH and TRAD ignore the private mapping (their buttons are fixed); IFTT
/// uses one button per entry of `policy.privateMapping`.
SimulationRun simulateSession(const UserPolicy& policy, EntryMode mode, int pinLength, std::string_view pin,
                              std::uint64_t seed, SessionOptions options = {});

}  // namespace iftt
