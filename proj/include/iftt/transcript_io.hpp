#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "iftt/session.hpp"

namespace iftt {

// Field order: mode, seed, button_count, pin_length, events, outcome.
nlohmann::ordered_json toJson(const Transcript& t);
Transcript transcriptFromJson(const nlohmann::json& j);

std::string dumpTranscript(const Transcript& t, int indent = 2);
Transcript parseTranscript(std::string_view text);

void writeTranscript(const std::filesystem::path& path, const Transcript& t);
Transcript readTranscript(const std::filesystem::path& path);

}  // namespace iftt
