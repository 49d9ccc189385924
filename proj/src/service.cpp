#include "iftt/service.hpp"

#include <cstdio>

#include <httplib.h>

#include "iftt/transcript_io.hpp"

namespace iftt {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ServiceResponse error(int status, std::string message) {
  ordered_json body;
  body["error"] = std::move(message);
  return {status, std::move(body)};
}

ordered_json patternJson(const PinSession& s) {
  return s.currentPattern() ? ordered_json(s.currentPattern()->toString()) : ordered_json();
}

ordered_json buttonsJson(const PinSession& s) {
  auto out = ordered_json::array();
  for (int b = 0; b < s.buttonCount(); ++b) {
    ordered_json button;
    button["index"] = b;
    std::optional<Color> c;
    if (s.mode() != EntryMode::Trad) c = s.mapping().color(ButtonId{b});
    button["color"] = !c ? "unknown" : (*c == Color::Yellow ? "yellow" : "gray");
    out.push_back(std::move(button));
  }
  return out;
}

// Per-digit view of the hypotheses: observed colors per pressed button and
// whether the digit is still consistent.
ordered_json dashboardJson(const DigitHypotheses& h) {
  ordered_json d;
  d["clicks"] = h.clicks();
  auto digits = ordered_json::array();
  for (Digit digit : h.initialCandidates()) {
    ordered_json row;
    row["digit"] = digit.value;
    row["consistent"] = h.consistent(digit);
    row["eliminated_by_known"] = h.eliminatedByKnown().contains(digit);
    auto buttons = ordered_json::array();
    for (int b = 0; b < h.buttonCount(); ++b) {
      ColorSet seen = h.observed(digit, ButtonId{b});
      if (seen.empty()) continue;
      ordered_json cell;
      cell["index"] = b;
      cell["colors"] = seen.toString();
      cell["consistent"] = seen.size() <= 1;
      buttons.push_back(std::move(cell));
    }
    row["buttons"] = std::move(buttons);
    digits.push_back(std::move(row));
  }
  d["digits"] = std::move(digits);
  return d;
}

void addOutcome(ordered_json& body, const PinSession& s) {
  body["status"] = toString(s.status());
  if (s.status() == SessionStatus::Completed) body["pin"] = s.enteredPin();
  if (s.status() == SessionStatus::Aborted) body["reason"] = s.abortReason();
}

template <typename T>
T intOr(const json& body, const char* key, T fallback) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return fallback;
  if (!it->is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
  if constexpr (std::is_unsigned_v<T>) {
    if (it->get<long long>() < 0 && !it->is_number_unsigned())
      throw ParseError(std::string("'") + key + "' must be non-negative");
  }
  return it->get<T>();
}

}  // namespace

SessionService::SessionService(ServiceOptions options)
    : options_(std::move(options)), idRng_(std::random_device{}()) {}

std::string SessionService::newId() {
  std::lock_guard lock(idMu_);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%08llx", static_cast<unsigned long long>(idRng_()),
                static_cast<unsigned long long>(++idCounter_));
  return buf;
}

std::size_t SessionService::size() const {
  std::shared_lock lock(mu_);
  return sessions_.size();
}

std::shared_ptr<SessionService::Entry> SessionService::find(std::string_view id, ServiceResponse& err) {
  std::shared_ptr<Entry> entry;
  {
    std::shared_lock lock(mu_);
    auto it = sessions_.find(std::string(id));
    if (it != sessions_.end()) entry = it->second;
  }
  if (!entry) {
    err = error(404, "session not found");
    return nullptr;
  }
  const auto now = options_.clock();
  {
    std::lock_guard lock(entry->mu);
    if (now - entry->lastAccess <= options_.ttl) {
      entry->lastAccess = now;
      return entry;
    }
  }
  std::unique_lock lock(mu_);
  sessions_.erase(std::string(id));
  err = error(410, "session expired");
  return nullptr;
}

ServiceResponse SessionService::create(const json& body) {
  if (!body.is_object()) return error(400, "request body must be a JSON object");
  EntryMode mode;
  int pinLength;
  int buttonCount;
  std::uint64_t seed;
  bool debug = false;
  try {
    auto it = body.find("mode");
    if (it == body.end() || !it->is_string()) return error(400, "'mode' must be one of trad, roth, iftt");
    mode = entryModeFromString(it->get<std::string>());
    pinLength = intOr(body, "pin_length", 4);
    const int defaultButtons = mode == EntryMode::Roth ? 2 : (mode == EntryMode::Trad ? kTradButtonCount : kDefaultButtonCount);
    buttonCount = intOr(body, "button_count", defaultButtons);
    seed = intOr<std::uint64_t>(body, "seed", std::random_device{}());
    if (auto d = body.find("debug"); d != body.end() && !d->is_null()) {
      if (!d->is_boolean()) return error(400, "'debug' must be a boolean");
      debug = d->get<bool>();
    }
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const json::exception& e) {
    return error(400, e.what());
  }

  std::optional<PinSession> session;
  try {
    session = PinSession::start(mode, pinLength, buttonCount, seed);
  } catch (const DomainError& e) {
    return error(400, e.what());
  }
  auto entry = std::make_shared<Entry>(SessionHandle{newId(), options_.clock(), std::move(*session)});
  entry->lastAccess = entry->handle.createdAt;
  entry->debug = debug;

  const PinSession& s = entry->handle.state;
  ordered_json out;
  out["id"] = entry->handle.id;
  out["pattern"] = patternJson(s);
  out["buttons"] = buttonsJson(s);
  out["resolved_count"] = s.resolvedDigits().size();
  addOutcome(out, s);
  if (debug && s.inference()) out["dashboard"] = dashboardJson(*s.inference());
  {
    std::unique_lock lock(mu_);
    sessions_.emplace(entry->handle.id, entry);
  }
  return {201, std::move(out)};
}

ServiceResponse SessionService::press(std::string_view id, const json& body) {
  ServiceResponse err;
  auto entry = find(id, err);
  if (!entry) return err;
  if (!body.is_object()) return error(400, "request body must be a JSON object");
  auto b = body.find("button");
  if (b == body.end() || !b->is_number_integer()) return error(400, "'button' must be an integer");
  const long long index = b->get<long long>();

  std::lock_guard lock(entry->mu);
  PinSession& s = entry->handle.state;
  if (s.status() != SessionStatus::Active) return error(409, "session is " + std::string(toString(s.status())));
  if (index < 0 || index >= s.buttonCount())
    return error(400, "button out of range [0, " + std::to_string(s.buttonCount() - 1) + "]");

  // Snapshot so the dashboard can show the click that resolved a digit.
  std::optional<DigitHypotheses> before = s.inference();
  const ButtonMapping mappingBefore = s.mapping();
  const std::optional<ColorPattern> patternBefore = s.currentPattern();

  PressResult r = s.press(ButtonId{static_cast<int>(index)});

  ordered_json out;
  out["pattern"] = patternJson(s);
  out["buttons"] = buttonsJson(s);
  out["resolved_count"] = s.resolvedDigits().size();
  out["restarted"] = r.restarted;
  addOutcome(out, s);
  if (entry->debug) {
    if (r.resolved) out["last_resolved_digit"] = r.resolved->value;
    if (before && patternBefore) {
      before->record(mappingBefore, ClickEvent{ButtonId{static_cast<int>(index)}, *patternBefore, s.clickCount() - 1});
      out["dashboard"] = dashboardJson(*before);
    }
  }
  return {200, std::move(out)};
}

ServiceResponse SessionService::get(std::string_view id) {
  ServiceResponse err;
  auto entry = find(id, err);
  if (!entry) return err;
  std::lock_guard lock(entry->mu);
  const PinSession& s = entry->handle.state;
  ordered_json out;
  out["id"] = entry->handle.id;
  out["created_at"] = std::chrono::duration_cast<std::chrono::milliseconds>(entry->handle.createdAt.time_since_epoch()).count();
  out["mode"] = toString(s.mode());
  out["seed"] = s.seed();
  out["pin_length"] = s.pinLength();
  out["button_count"] = s.buttonCount();
  out["debug"] = entry->debug;
  out["pattern"] = patternJson(s);
  out["buttons"] = buttonsJson(s);
  out["resolved_count"] = s.resolvedDigits().size();
  out["click_count"] = s.clickCount();
  out["click_cap"] = s.clickCap();
  addOutcome(out, s);
  if (entry->debug) {
    auto digits = ordered_json::array();
    for (Digit d : s.resolvedDigits()) digits.push_back(d.value);
    out["resolved_digits"] = std::move(digits);
    if (s.inference()) out["dashboard"] = dashboardJson(*s.inference());
  }
  return {200, std::move(out)};
}

ServiceResponse SessionService::transcript(std::string_view id) {
  ServiceResponse err;
  auto entry = find(id, err);
  if (!entry) return err;
  std::lock_guard lock(entry->mu);
  return {200, toJson(entry->handle.state.transcript())};
}

ServiceResponse SessionService::remove(std::string_view id) {
  std::unique_lock lock(mu_);
  if (sessions_.erase(std::string(id)) == 0) return error(404, "session not found");
  return {204, ordered_json()};
}

void mountRoutes(httplib::Server& server, SessionService& service) {
  auto reply = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    if (r.status != 204) res.set_content(r.body.dump(), "application/json");
  };
  auto parseBody = [](const httplib::Request& req, httplib::Response& res, json& out) {
    if (req.body.empty()) {
      out = json::object();
      return true;
    }
    try {
      out = json::parse(req.body);
      return true;
    } catch (const json::parse_error& e) {
      ordered_json body;
      body["error"] = std::string("invalid JSON: ") + e.what();
      res.status = 400;
      res.set_content(body.dump(), "application/json");
      return false;
    }
  };

  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/api/sessions", [&service, reply, parseBody](const httplib::Request& req, httplib::Response& res) {
    json body;
    if (parseBody(req, res, body)) reply(res, service.create(body));
  });
  server.Post(R"(/api/sessions/([^/]+)/press)",
              [&service, reply, parseBody](const httplib::Request& req, httplib::Response& res) {
                json body;
                if (parseBody(req, res, body)) reply(res, service.press(req.matches[1].str(), body));
              });
  server.Get(R"(/api/sessions/([^/]+)/transcript)", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.transcript(req.matches[1].str()));
  });
  server.Get(R"(/api/sessions/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get(req.matches[1].str()));
  });
  server.Delete(R"(/api/sessions/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.remove(req.matches[1].str()));
  });
}

}  // namespace iftt
