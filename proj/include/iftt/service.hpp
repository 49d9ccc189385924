#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include <json.hpp>

#include "iftt/session.hpp"

namespace httplib {
class Server;
}

namespace iftt {

struct SessionHandle {
  std::string id;
  std::chrono::system_clock::time_point createdAt;
  PinSession state;
};

struct ServiceResponse {
  int status = 200;
  nlohmann::ordered_json body;
};

struct ServiceOptions {
  // Idle time after which a session id is rejected.
  std::chrono::seconds ttl{30 * 60};
  std::function<std::chrono::system_clock::time_point()> clock = [] { return std::chrono::system_clock::now(); };
};

/// In-memory session store behind the HTTP API.
///
/// Requests on one session are serialized by that session's mutex; requests
/// on different sessions only share the map lock. Inferred digits stay hidden
/// until the PIN completes unless the session was created with debug=true.
class SessionService {
 public:
  explicit SessionService(ServiceOptions options = {});

  ServiceResponse create(const nlohmann::json& body);
  ServiceResponse press(std::string_view id, const nlohmann::json& body);
  ServiceResponse get(std::string_view id);
  ServiceResponse transcript(std::string_view id);
  ServiceResponse remove(std::string_view id);

  std::size_t size() const;

 private:
  struct Entry {
    explicit Entry(SessionHandle h) : handle(std::move(h)) {}
    std::mutex mu;
    SessionHandle handle;
    bool debug = false;
    std::chrono::system_clock::time_point lastAccess;
  };

  // Null with `error` filled when the id is unknown or expired.
  std::shared_ptr<Entry> find(std::string_view id, ServiceResponse& error);
  std::string newId();

  ServiceOptions options_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
  std::mutex idMu_;
  std::mt19937_64 idRng_;
  std::uint64_t idCounter_ = 0;
};

// Registers the /api routes. Bodies are JSON; malformed JSON yields 400.
void mountRoutes(httplib::Server& server, SessionService& service);

}  // namespace iftt
