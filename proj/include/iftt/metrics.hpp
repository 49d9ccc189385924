#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "iftt/simulation.hpp"
#include "iftt/types.hpp"

namespace iftt {

inline constexpr double kDefaultSecondsPerClick = 2.0;

// Rate of entering divided by rate of decoding, both in digits per minute.
// A non-positive decoding rate means the decoding side is only lower-bounded
// and is rejected with DomainError.
double sutoScore(double encodingRate, double decodingRate);

struct Summary {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

Summary summarize(std::span<const double> values);

struct BenchmarkConfig {
  EntryMode mode = EntryMode::Iftt;
  ButtonChoice choice = ButtonChoice::Lazy;
  int subsetSize = 3;
  int buttonCount = kDefaultButtonCount;
  int pinLength = 4;
  std::optional<std::string> pin;  // random per sample when unset
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double secondsPerClick = kDefaultSecondsPerClick;
  // Externally measured human decoding rate (digits/min).
  std::optional<double> decodingRate;
  int clickCap = kDefaultClickCap;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct MetricsReport {
  EntryMode mode = EntryMode::Iftt;
  ButtonChoice choice = ButtonChoice::Lazy;
  std::size_t sampleCount = 0;
  std::size_t completed = 0;
  std::size_t aborted = 0;
  std::size_t pinCorrect = 0;
  std::size_t attackerDecoded = 0;
  Summary clicksPerDigit;
  Summary clicksPerPin;
  std::vector<double> meanClicksPerPosition;
  double secondsPerClick = kDefaultSecondsPerClick;
  double encodingRate = 0.0;
  // Clicks the observer must see per decoded digit; the machine decoder
  // finishes together with the entry.
  double decodeClicksPerDigit = 0.0;
  std::optional<double> decodingRate;
  std::optional<double> sutoScore;
};

struct BenchmarkSample {
  std::string pin;
  std::vector<Color> privateMapping;  // IFTT only
  SimulationRun run;
};

// Sample i of the benchmark described by `cfg`.
BenchmarkSample simulateSample(const BenchmarkConfig& cfg, std::size_t i);

/// Simulates `samples` sessions. Sample i derives its session seed, user
/// mapping and (if not fixed) PIN from mixSeed(cfg.seed, i), so the report
/// does not depend on the thread count.
MetricsReport runBenchmark(const BenchmarkConfig& cfg);

nlohmann::ordered_json toJson(const MetricsReport& r);
std::string formatTable(const MetricsReport& r);

}  // namespace iftt
