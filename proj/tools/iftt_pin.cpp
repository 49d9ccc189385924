// Command-line front end: simulation benchmarks, transcript attacks, SUTO
// arithmetic and the local session service.

#include <csignal>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "iftt/attack.hpp"
#include "iftt/metrics.hpp"
#include "iftt/service.hpp"
#include "iftt/transcript_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndecided = 2;

httplib::Server* runningServer = nullptr;

void stopServer(int) {
  if (runningServer) runningServer->stop();
}

struct SimulateArgs {
  std::string mode = "iftt";
  std::string policy = "lazy";
  int subsetSize = 3;
  int buttons = iftt::kDefaultButtonCount;
  int pinLength = 4;
  std::string pin;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  double secondsPerClick = iftt::kDefaultSecondsPerClick;
  std::optional<double> decodeRate;
  int clickCap = iftt::kDefaultClickCap;
  unsigned threads = 0;
  bool json = false;
  std::string transcriptOut;
};

int runSimulate(const SimulateArgs& a) {
  iftt::BenchmarkConfig cfg;
  cfg.mode = iftt::entryModeFromString(a.mode);
  cfg.choice = iftt::buttonChoiceFromString(a.policy);
  cfg.subsetSize = a.subsetSize;
  cfg.buttonCount = a.buttons;
  cfg.pinLength = a.pinLength;
  if (!a.pin.empty()) cfg.pin = a.pin;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.secondsPerClick = a.secondsPerClick;
  cfg.decodingRate = a.decodeRate;
  cfg.clickCap = a.clickCap;
  cfg.threads = a.threads;

  const iftt::MetricsReport report = iftt::runBenchmark(cfg);
  if (a.json) {
    std::cout << iftt::toJson(report).dump(2) << '\n';
  } else {
    std::cout << iftt::formatTable(report);
  }
  if (!a.transcriptOut.empty()) iftt::writeTranscript(a.transcriptOut, iftt::simulateSample(cfg, 0).run.transcript);
  return report.aborted == 0 ? kExitOk : kExitUndecided;
}

int runAttack(const std::string& path) {
  const iftt::Transcript t = iftt::readTranscript(path);
  const auto positions = iftt::decodeTranscript(t);
  std::string pin;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const iftt::DigitSet s = positions[i];
    std::cout << "position " << i + 1 << ": " << s.toString() << '\n';
    pin += s.size() == 1 ? static_cast<char>('0' + s.front().value) : '?';
  }
  std::cout << "pin: " << pin << '\n';
  return iftt::fullyDecoded(positions) ? kExitOk : kExitUndecided;
}

int runSuto(double enterRate, double decodeRate) {
  std::cout << std::fixed << std::setprecision(2) << iftt::sutoScore(enterRate, decodeRate) << '\n';
  return kExitOk;
}

int runServe(const std::string& host, int port, int ttlSeconds, const std::string& staticDir) {
  iftt::ServiceOptions options;
  options.ttl = std::chrono::seconds(ttlSeconds);
  iftt::SessionService service(options);
  httplib::Server server;
  iftt::mountRoutes(server, service);
  if (!staticDir.empty() && !server.set_mount_point("/", staticDir)) {
    std::cerr << "error: cannot serve static files from " << staticDir << '\n';
    return kExitError;
  }
  // httplib's default sets SO_REUSEPORT, which lets a second server share an
  // occupied port; an occupied port must be a bind failure instead.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });
  if (!server.bind_to_port(host, port)) {
    std::cerr << "error: cannot bind " << host << ':' << port << '\n';
    return kExitError;
  }
  runningServer = &server;
  std::signal(SIGINT, stopServer);
  std::signal(SIGTERM, stopServer);
  std::cout << "listening on http://" << host << ':' << port << '\n' << std::flush;
  const bool ok = server.listen_after_bind();
  runningServer = nullptr;
  return ok ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-calibrating PIN entry: simulation, attack and SUTO tools"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Simulate PIN entry sessions and report click metrics");
  simulate->add_option("--mode", sim.mode, "Entry mode")->check(CLI::IsMember({"trad", "roth", "iftt"}))->capture_default_str();
  simulate->add_option("--policy", sim.policy, "Simulated button choice (IFTT)")
      ->check(CLI::IsMember({"lazy", "uniform", "subset"}))
      ->capture_default_str();
  simulate->add_option("--subset-k", sim.subsetSize, "Buttons used by the subset policy")->capture_default_str();
  simulate->add_option("--buttons", sim.buttons, "IFTT button count")->check(CLI::Range(2, 16))->capture_default_str();
  simulate->add_option("--pin-length", sim.pinLength, "Length of random PINs")->check(CLI::Range(1, 64))->capture_default_str();
  simulate->add_option("--pin", sim.pin, "Fixed PIN for every sample (random otherwise)");
  simulate->add_option("--samples", sim.samples, "Number of simulated sessions")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Base seed")->capture_default_str();
  simulate->add_option("--seconds-per-click", sim.secondsPerClick, "Time cost of one click")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--decode-rate", sim.decodeRate, "Measured human decoding rate (digits/min) for the SUTO score");
  simulate->add_option("--click-cap", sim.clickCap, "Clicks before a session aborts")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--threads", sim.threads, "Worker threads (0: all cores)")->capture_default_str();
  simulate->add_flag("--json", sim.json, "Print the report as JSON");
  simulate->add_option("--transcript-out", sim.transcriptOut, "Write the transcript of sample 0 to this file");

  std::string transcriptPath;
  auto* attack = app.add_subcommand("attack", "Decode a recorded transcript as a full-recording observer");
  attack->add_option("transcript", transcriptPath, "Transcript JSON file")->required();

  double enterRate = 0.0;
  double decodeRate = 0.0;
  auto* suto = app.add_subcommand("suto", "Security-usability trade-off score: entering rate / decoding rate");
  suto->add_option("--enter-rate", enterRate, "Digits entered per minute")->required();
  suto->add_option("--decode-rate", decodeRate, "Digits decoded per minute")->required();

  std::string host = "127.0.0.1";
  int port = 8080;
  int ttl = 30 * 60;
  std::string staticDir;
  auto* serve = app.add_subcommand("serve", "Run the local HTTP/JSON session service");
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535))->capture_default_str();
  serve->add_option("--ttl", ttl, "Idle seconds before a session expires")->check(CLI::PositiveNumber)->capture_default_str();
  serve->add_option("--static-dir", staticDir, "Directory served at / (companion UI)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return runSimulate(sim);
    if (*attack) return runAttack(transcriptPath);
    if (*suto) return runSuto(enterRate, decodeRate);
    if (*serve) return runServe(host, port, ttl, staticDir);
  } catch (const iftt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
