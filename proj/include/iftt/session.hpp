#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iftt/inference.hpp"
#include "iftt/planner.hpp"
#include "iftt/types.hpp"

namespace iftt {

inline constexpr int kDefaultClickCap = 200;
inline constexpr int kTradButtonCount = 10;
inline constexpr std::string_view kCapExceeded = "cap_exceeded";

enum class SessionStatus : std::uint8_t { Active, Completed, Aborted };

std::string_view toString(SessionStatus s);

struct SessionOptions {
  int clickCap = kDefaultClickCap;
  bool balance = true;
  // IFTT only: colors known before the first press.
  std::optional<ButtonMapping> precommitted;
};

// One observer-visible press. TRAD events carry no pattern and `button` is the digit.
struct TranscriptEvent {
  std::optional<ColorPattern> pattern;
  int button = 0;
  friend bool operator==(const TranscriptEvent&, const TranscriptEvent&) = default;
};

struct Outcome {
  SessionStatus status = SessionStatus::Active;
  std::string pin;     // completed only
  std::string reason;  // aborted only
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct Transcript {
  EntryMode mode = EntryMode::Iftt;
  std::uint64_t seed = 0;
  int buttonCount = kDefaultButtonCount;
  int pinLength = 4;
  std::vector<TranscriptEvent> events;
  Outcome outcome;
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

struct PressResult {
  std::optional<Digit> resolved;
  // The press left no consistent digit; the current position starts over.
  bool restarted = false;
};

/// Multi-digit PIN entry in one of the three modes.
///
/// ROTH and IFTT sessions run one DigitHypotheses per PIN position. Button
/// colors learned when a position resolves stay committed for the rest of the
/// session, so later positions fall back to direct elimination on those
/// buttons. A press that leaves no consistent digit restarts the current
/// position and keeps the commitments.
class PinSession {
 public:
  static PinSession start(EntryMode mode, int pinLength, int buttonCount, std::uint64_t seed,
                          SessionOptions options = {});

  // Rebuilds a session by pressing every transcript event in order. Throws
  // ParseError when a recorded pattern differs from the regenerated one.
  static PinSession replay(const Transcript& t, SessionOptions options = {});

  PressResult press(ButtonId button);

  EntryMode mode() const { return mode_; }
  int pinLength() const { return pinLength_; }
  int buttonCount() const { return buttonCount_; }
  int digitCount() const { return kDefaultDigitCount; }
  std::uint64_t seed() const { return seed_; }
  SessionStatus status() const { return status_; }
  const std::string& abortReason() const { return abortReason_; }

  const std::vector<Digit>& resolvedDigits() const { return resolved_; }
  // "1234" for the digits resolved so far.
  std::string enteredPin() const;
  const std::optional<DigitHypotheses>& inference() const { return inference_; }
  const ButtonMapping& mapping() const { return mapping_; }
  const std::optional<ColorPattern>& currentPattern() const { return pattern_; }
  int clickCount() const { return clickCount_; }
  int clickCap() const { return clickCap_; }

  // Clicks recorded into the current position's inference.
  std::span<const ClickEvent> digitHistory() const { return digitHistory_; }
  // Clicks spent on each resolved position, restarts included.
  const std::vector<int>& clicksPerPosition() const { return clicksPerPosition_; }
  const std::vector<std::string>& incidents() const { return incidents_; }

  Transcript transcript() const;

  friend bool operator==(const PinSession&, const PinSession&) = default;

 private:
  PinSession() = default;
  void beginPosition();
  void planNext();

  EntryMode mode_ = EntryMode::Iftt;
  int pinLength_ = 4;
  int buttonCount_ = kDefaultButtonCount;
  std::uint64_t seed_ = 0;
  int clickCap_ = kDefaultClickCap;
  bool balance_ = true;
  SessionStatus status_ = SessionStatus::Active;
  std::string abortReason_;

  std::vector<Digit> resolved_;
  std::optional<DigitHypotheses> inference_;
  ButtonMapping mapping_;
  std::optional<ColorPattern> pattern_;
  int clickCount_ = 0;
  int positionClicks_ = 0;
  std::vector<ClickEvent> digitHistory_;
  std::vector<int> clicksPerPosition_;
  std::vector<std::string> incidents_;
  std::vector<TranscriptEvent> events_;
};

}  // namespace iftt
