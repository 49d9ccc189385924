#include "iftt/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "iftt/attack.hpp"
#include "iftt/random.hpp"

namespace iftt {

double sutoScore(double encodingRate, double decodingRate) {
  if (!(decodingRate > 0.0))
    throw DomainError("decoding rate must be positive; a zero rate only lower-bounds the SUTO score");
  if (!(encodingRate >= 0.0)) throw DomainError("encoding rate must be non-negative");
  return encodingRate / decodingRate;
}

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

namespace {

struct SampleResult {
  bool completed = false;
  bool pinCorrect = false;
  bool decoded = false;
  std::vector<int> clicks;
};

SampleResult runSample(const BenchmarkConfig& cfg, std::size_t i) {
  BenchmarkSample sample = simulateSample(cfg, i);
  const Transcript& t = sample.run.transcript;
  SampleResult r;
  r.completed = t.outcome.status == SessionStatus::Completed;
  r.pinCorrect = r.completed && t.outcome.pin == sample.pin;
  r.clicks = sample.run.clicksPerPosition;
  if (r.completed) {
    std::string decoded;
    for (DigitSet s : decodeTranscript(t)) decoded += s.size() == 1 ? static_cast<char>('0' + s.front().value) : '?';
    r.decoded = decoded == sample.pin;
  }
  return r;
}

}  // namespace

BenchmarkSample simulateSample(const BenchmarkConfig& cfg, std::size_t i) {
  const std::uint64_t sampleSeed = mixSeed(cfg.seed, i);
  std::mt19937_64 rng(sampleSeed);

  BenchmarkSample sample;
  if (cfg.pin) {
    sample.pin = *cfg.pin;
  } else {
    for (int p = 0; p < cfg.pinLength; ++p) sample.pin += static_cast<char>('0' + drawBelow(rng, kDefaultDigitCount));
  }

  UserPolicy policy;
  policy.choice = cfg.choice;
  policy.subsetSize = cfg.subsetSize;
  policy.seed = mixSeed(sampleSeed, 1);
  if (cfg.mode == EntryMode::Iftt) policy.privateMapping = randomMapping(cfg.buttonCount, rng);
  sample.privateMapping = policy.privateMapping;

  SessionOptions options;
  options.clickCap = cfg.clickCap;
  sample.run = simulateSession(policy, cfg.mode, static_cast<int>(sample.pin.size()), sample.pin,
                               mixSeed(sampleSeed, 2), options);
  return sample;
}

MetricsReport runBenchmark(const BenchmarkConfig& cfg) {
  if (cfg.samples < 1) throw DomainError("benchmark needs at least one sample");
  if (!(cfg.secondsPerClick > 0.0)) throw DomainError("seconds per click must be positive");
  const int pinLength = cfg.pin ? static_cast<int>(cfg.pin->size()) : cfg.pinLength;
  if (pinLength < 1) throw DomainError("PIN length must be at least 1");
  if (cfg.pin) parsePin(*cfg.pin);

  std::vector<SampleResult> results(cfg.samples);
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.samples));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cfg.samples && !failed; i = next++) {
          try {
            results[i] = runSample(cfg, i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  MetricsReport r;
  r.mode = cfg.mode;
  r.choice = cfg.choice;
  r.sampleCount = cfg.samples;
  r.secondsPerClick = cfg.secondsPerClick;

  std::vector<double> perDigit;
  std::vector<double> perPin;
  std::vector<double> positionSums(static_cast<std::size_t>(pinLength), 0.0);
  for (const SampleResult& s : results) {
    if (!s.completed) {
      ++r.aborted;
      continue;
    }
    ++r.completed;
    r.pinCorrect += s.pinCorrect;
    r.attackerDecoded += s.decoded;
    int total = 0;
    for (std::size_t p = 0; p < s.clicks.size(); ++p) {
      perDigit.push_back(s.clicks[p]);
      positionSums[p] += s.clicks[p];
      total += s.clicks[p];
    }
    perPin.push_back(total);
  }
  r.clicksPerDigit = summarize(perDigit);
  r.clicksPerPin = summarize(perPin);
  for (double sum : positionSums) r.meanClicksPerPosition.push_back(r.completed ? sum / static_cast<double>(r.completed) : 0.0);

  if (r.clicksPerDigit.count > 0) {
    r.encodingRate = 60.0 / (r.clicksPerDigit.mean * cfg.secondsPerClick);
    r.decodeClicksPerDigit = r.clicksPerDigit.mean;
  }
  if (cfg.decodingRate) {
    r.decodingRate = cfg.decodingRate;
    r.sutoScore = sutoScore(r.encodingRate, *cfg.decodingRate);
  }
  return r;
}

namespace {

nlohmann::ordered_json toJson(const Summary& s) {
  nlohmann::ordered_json j;
  j["mean"] = s.mean;
  j["sd"] = s.sd;
  j["min"] = s.min;
  j["max"] = s.max;
  j["count"] = s.count;
  return j;
}

std::string fixed(double v, int precision = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

}  // namespace

nlohmann::ordered_json toJson(const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = toString(r.mode);
  j["policy"] = toString(r.choice);
  j["sample_count"] = r.sampleCount;
  j["completed"] = r.completed;
  j["aborted"] = r.aborted;
  j["pin_correct"] = r.pinCorrect;
  j["attacker_decoded"] = r.attackerDecoded;
  j["clicks_per_digit"] = toJson(r.clicksPerDigit);
  j["clicks_per_pin"] = toJson(r.clicksPerPin);
  j["mean_clicks_per_position"] = r.meanClicksPerPosition;
  j["seconds_per_click"] = r.secondsPerClick;
  j["encoding_rate"] = r.encodingRate;
  j["decode_clicks_per_digit"] = r.decodeClicksPerDigit;
  j["decoding_rate"] = r.decodingRate ? nlohmann::ordered_json(*r.decodingRate) : nlohmann::ordered_json();
  j["suto_score"] = r.sutoScore ? nlohmann::ordered_json(*r.sutoScore) : nlohmann::ordered_json();
  return j;
}

std::string formatTable(const MetricsReport& r) {
  std::vector<std::pair<std::string, std::string>> rows = {
      {"mode", std::string(toString(r.mode))},
      {"policy", r.mode == EntryMode::Iftt ? std::string(toString(r.choice)) : std::string("-")},
      {"samples", std::to_string(r.sampleCount)},
      {"completed", std::to_string(r.completed)},
      {"aborted", std::to_string(r.aborted)},
      {"pin correct", std::to_string(r.pinCorrect)},
      {"attacker decoded", std::to_string(r.attackerDecoded)},
      {"clicks/digit mean", fixed(r.clicksPerDigit.mean)},
      {"clicks/digit sd", fixed(r.clicksPerDigit.sd)},
      {"clicks/digit min", fixed(r.clicksPerDigit.min, 0)},
      {"clicks/digit max", fixed(r.clicksPerDigit.max, 0)},
      {"clicks/pin mean", fixed(r.clicksPerPin.mean)},
  };
  for (std::size_t p = 0; p < r.meanClicksPerPosition.size(); ++p)
    rows.emplace_back("clicks at position " + std::to_string(p + 1), fixed(r.meanClicksPerPosition[p]));
  rows.emplace_back("seconds/click", fixed(r.secondsPerClick, 2));
  rows.emplace_back("encoding rate (digits/min)", fixed(r.encodingRate, 2));
  rows.emplace_back("decode clicks/digit", fixed(r.decodeClicksPerDigit));
  rows.emplace_back("decoding rate (digits/min)", r.decodingRate ? fixed(*r.decodingRate, 2) : "n/a");
  rows.emplace_back("SUTO score", r.sutoScore ? fixed(*r.sutoScore, 2) : "n/a");

  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream os;
  for (const auto& [key, value] : rows) os << std::left << std::setw(static_cast<int>(width) + 2) << key << value << '\n';
  return os.str();
}

}  // namespace iftt
