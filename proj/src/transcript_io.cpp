#include "iftt/transcript_io.hpp"

#include <fstream>
#include <sstream>

namespace iftt {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int intField(const json& j, const char* key, int lo, int hi) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  auto x = v.get<long long>();
  if (x < lo || x > hi)
    throw ParseError(std::string("field '") + key + "' out of range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]: " + std::to_string(x));
  return static_cast<int>(x);
}

std::string stringField(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

nlohmann::ordered_json toJson(const Transcript& t) {
  nlohmann::ordered_json j;
  j["mode"] = toString(t.mode);
  j["seed"] = t.seed;
  j["button_count"] = t.buttonCount;
  j["pin_length"] = t.pinLength;
  auto events = nlohmann::ordered_json::array();
  for (const TranscriptEvent& e : t.events) {
    nlohmann::ordered_json ev;
    if (t.mode == EntryMode::Trad) {
      ev["digit"] = e.button;
    } else {
      ev["pattern"] = e.pattern ? e.pattern->toString() : std::string();
      ev["button"] = e.button;
    }
    events.push_back(std::move(ev));
  }
  j["events"] = std::move(events);
  nlohmann::ordered_json outcome;
  outcome["status"] = toString(t.outcome.status);
  if (t.outcome.status == SessionStatus::Completed) outcome["pin"] = t.outcome.pin;
  if (t.outcome.status == SessionStatus::Aborted) outcome["reason"] = t.outcome.reason;
  j["outcome"] = std::move(outcome);
  return j;
}

Transcript transcriptFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("transcript must be a JSON object");
  Transcript t;
  t.mode = entryModeFromString(stringField(j, "mode"));
  const json& seed = field(j, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
    throw ParseError("field 'seed' must be an unsigned integer");
  t.seed = seed.get<std::uint64_t>();
  t.buttonCount = intField(j, "button_count", 1, kMaxButtonCount);
  t.pinLength = intField(j, "pin_length", 1, 1 << 16);

  const json& events = field(j, "events");
  if (!events.is_array()) throw ParseError("field 'events' must be an array");
  for (const json& ev : events) {
    if (!ev.is_object()) throw ParseError("event must be an object");
    TranscriptEvent e;
    if (t.mode == EntryMode::Trad) {
      e.button = intField(ev, "digit", 0, kDefaultDigitCount - 1);
    } else {
      std::string text = stringField(ev, "pattern");
      if (text.size() != static_cast<std::size_t>(kDefaultDigitCount))
        throw ParseError("pattern must have 10 characters: '" + text + "'");
      try {
        e.pattern = ColorPattern::fromString(text);
      } catch (const DomainError& err) {
        throw ParseError(err.what());
      }
      if (!e.pattern->hasBothColors()) throw ParseError("pattern shows a single color: '" + text + "'");
      e.button = intField(ev, "button", 0, t.buttonCount - 1);
    }
    t.events.push_back(std::move(e));
  }

  // A transcript cut mid-session may lack its outcome.
  if (auto it = j.find("outcome"); it != j.end()) {
    if (!it->is_object()) throw ParseError("field 'outcome' must be an object");
    std::string status = stringField(*it, "status");
    if (status == "completed") {
      t.outcome.status = SessionStatus::Completed;
      t.outcome.pin = stringField(*it, "pin");
      for (char c : t.outcome.pin) {
        if (c < '0' || c > '9') throw ParseError("pin must contain digits only");
      }
    } else if (status == "aborted") {
      t.outcome.status = SessionStatus::Aborted;
      if (it->contains("reason")) t.outcome.reason = stringField(*it, "reason");
    } else if (status == "in_progress") {
      t.outcome.status = SessionStatus::Active;
    } else {
      throw ParseError("unknown outcome status '" + status + "'");
    }
  }
  return t;
}

std::string dumpTranscript(const Transcript& t, int indent) { return toJson(t).dump(indent); }

Transcript parseTranscript(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  try {
    return transcriptFromJson(j);
  } catch (const json::exception& err) {
    throw ParseError(err.what());
  }
}

void writeTranscript(const std::filesystem::path& path, const Transcript& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << dumpTranscript(t) << '\n';
}

Transcript readTranscript(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseTranscript(buf.str());
}

}  // namespace iftt
