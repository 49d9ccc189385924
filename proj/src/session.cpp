#include "iftt/session.hpp"

#include <string>

namespace iftt {

std::string_view toString(SessionStatus s) {
  switch (s) {
    case SessionStatus::Active:
      return "in_progress";
    case SessionStatus::Completed:
      return "completed";
    case SessionStatus::Aborted:
      return "aborted";
  }
  return "?";
}

PinSession PinSession::start(EntryMode mode, int pinLength, int buttonCount, std::uint64_t seed,
                             SessionOptions options) {
  if (pinLength < 1) throw DomainError("PIN length must be at least 1");
  if (options.clickCap < 1) throw DomainError("click cap must be at least 1");

  PinSession s;
  s.mode_ = mode;
  s.pinLength_ = pinLength;
  s.seed_ = seed;
  s.clickCap_ = options.clickCap;
  s.balance_ = options.balance;

  switch (mode) {
    case EntryMode::Trad:
      s.buttonCount_ = kTradButtonCount;
      break;
    case EntryMode::Roth:
      if (buttonCount != 2) throw DomainError("ROTH uses exactly 2 buttons, got " + std::to_string(buttonCount));
      s.buttonCount_ = 2;
      s.mapping_ = ButtonMapping::fromColors({Color::Yellow, Color::Gray});
      break;
    case EntryMode::Iftt:
      if (buttonCount < 2 || buttonCount > kMaxButtonCount)
        throw DomainError("IFTT needs between 2 and 16 buttons, got " + std::to_string(buttonCount));
      s.buttonCount_ = buttonCount;
      s.mapping_ = ButtonMapping(buttonCount);
      if (options.precommitted) {
        if (options.precommitted->buttonCount() != buttonCount)
          throw DomainError("pre-committed mapping has the wrong button count");
        s.mapping_ = *options.precommitted;
      }
      break;
  }
  if (options.precommitted && mode != EntryMode::Iftt)
    throw DomainError("only IFTT sessions accept a pre-committed mapping");

  s.beginPosition();
  return s;
}

void PinSession::beginPosition() {
  digitHistory_.clear();
  if (mode_ == EntryMode::Trad) return;
  inference_ = newDigitInference(DigitSet::range(digitCount()), mapping_, digitCount());
  planNext();
}

void PinSession::planNext() {
  const DigitSet live = consistentDigits(*inference_);
  const auto step = static_cast<std::uint64_t>(clickCount_);
  if (mode_ == EntryMode::Roth) {
    pattern_ = rothSchedule(step, live, seed_, digitCount(), balance_);
  } else {
    PlannerConfig cfg{mode_, seed_, balance_, digitCount()};
    pattern_ = nextPattern(cfg, live, digitHistory_, mapping_, step);
  }
}

PressResult PinSession::press(ButtonId button) {
  if (status_ != SessionStatus::Active)
    throw DomainError("session is " + std::string(toString(status_)) + "; no further presses accepted");
  if (button.index < 0 || button.index >= buttonCount_)
    throw DomainError("button out of range: " + std::to_string(button.index));

  PressResult result;
  ++clickCount_;
  ++positionClicks_;

  if (mode_ == EntryMode::Trad) {
    events_.push_back(TranscriptEvent{std::nullopt, button.index});
    result.resolved = Digit{button.index};
  } else {
    ClickEvent e{button, *pattern_, clickCount_ - 1};
    events_.push_back(TranscriptEvent{e.pattern, button.index});
    inference_->record(mapping_, e);
    digitHistory_.push_back(e);
    try {
      if (auto r = resolve(*inference_)) {
        for (const auto& [b, c] : r->commitments) mapping_.commit(b, c);
        result.resolved = r->digit;
      }
    } catch (const InconsistentUser& err) {
      incidents_.push_back("position " + std::to_string(resolved_.size() + 1) + ": " + err.what());
      result.restarted = true;
    }
  }

  if (result.resolved) {
    resolved_.push_back(*result.resolved);
    clicksPerPosition_.push_back(positionClicks_);
    positionClicks_ = 0;
    if (static_cast<int>(resolved_.size()) == pinLength_) {
      status_ = SessionStatus::Completed;
      inference_.reset();
      pattern_.reset();
      digitHistory_.clear();
      return result;
    }
  }

  if (clickCount_ >= clickCap_) {
    status_ = SessionStatus::Aborted;
    abortReason_ = std::string(kCapExceeded);
    pattern_.reset();
    return result;
  }

  if (result.resolved || result.restarted) {
    beginPosition();
  } else if (mode_ != EntryMode::Trad) {
    planNext();
  }
  return result;
}

std::string PinSession::enteredPin() const {
  std::string pin;
  for (Digit d : resolved_) pin += std::to_string(d.value);
  return pin;
}

Transcript PinSession::transcript() const {
  Transcript t;
  t.mode = mode_;
  t.seed = seed_;
  t.buttonCount = buttonCount_;
  t.pinLength = pinLength_;
  t.events = events_;
  t.outcome.status = status_;
  if (status_ == SessionStatus::Completed) t.outcome.pin = enteredPin();
  if (status_ == SessionStatus::Aborted) t.outcome.reason = abortReason_;
  return t;
}

PinSession PinSession::replay(const Transcript& t, SessionOptions options) {
  PinSession s = start(t.mode, t.pinLength, t.buttonCount, t.seed, std::move(options));
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    const TranscriptEvent& e = t.events[i];
    if (s.status_ != SessionStatus::Active)
      throw ParseError("transcript continues after the session ended (event " + std::to_string(i) + ")");
    if (t.mode != EntryMode::Trad && (!e.pattern || !s.pattern_ || !(*e.pattern == *s.pattern_)))
      throw ParseError("event " + std::to_string(i) + " pattern does not match the replayed session");
    s.press(ButtonId{e.button});
  }
  return s;
}

}  // namespace iftt
