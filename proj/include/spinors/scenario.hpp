// Scenario-file front end: JSON configuration for transport and frame runs, CSV
// trajectory output with a JSON metadata sidecar, and the run reports.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spinors/free_states.hpp"
#include "spinors/suites.hpp"

namespace spinors {

// Invalid scenario input; `field` holds the dotted path of the offending entry.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Scenario {
  // background
  std::string background_kind = "minkowski";  // or "schwarzschild"
  double mass_param = 0;
  // worldline
  std::string worldline_kind = "static";  // "static" | "circular" | "rindler"
  Vec4d position{};
  double radius = 0, omega = 0, accel = 0;
  // transport
  std::string transport_kind = "vector";  // "vector" | "two-spinor" | "four-spinor"
  std::vector<cplx> initial;
  double s0 = 0, s1 = 1, step = 1e-3;
  bool alpha_is_table = false;
  double alpha_const = 0;
  std::vector<std::pair<double, double>> alpha_table;
  int samples = 100;
  // free-state runs
  double mass = 1.0;
  std::vector<Vec4d> momenta;  // covector frame components
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

Background make_background(const Scenario& sc);
Worldline make_worldline(const Scenario& sc, const Background& bg);
TransportOptions make_transport_options(const Scenario& sc);
TransportState make_initial_state(const Scenario& sc);

struct RunOutput {
  std::vector<CheckResult> checks;
  std::string csv;       // trajectory or frame rows
  std::string metadata;  // JSON sidecar content
  bool passed() const;
};

// Integrates the configured transport; rows carry the frame components, the conserved
// pairing for the kind, and (on circular orbits) the accumulated spatial rotation
// angle. The metadata includes a step-halving Richardson error estimate.
RunOutput run_transport_scenario(const Scenario& sc);

// Fermi-transports the adapted frame and boosts it to every configured momentum;
// rows carry the 16 frame components per momentum and the adaptedness residuals.
// Off-shell momenta are rejected with their index.
RunOutput run_frames_scenario(const Scenario& sc);

// Formats a suite report as the deterministic text block used by the CLI.
std::string format_reports(const std::vector<SuiteReport>& reports, uint64_t seed);

void write_file(const std::string& path, const std::string& content);

}  // namespace spinors
