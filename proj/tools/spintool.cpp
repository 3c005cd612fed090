// spintool: scenario-driven front end for the spinor transport library.
//
//   spintool check [suite] [--seed N]      run invariant suites
//   spintool transport <scenario.json>     integrate a transport, write CSV + metadata
//   spintool frames <scenario.json>        Dirac frames along a worldline, write CSV
//   spintool precession --radius R --omega W --steps N
//
// Exit codes: 0 pass, 1 invariant failure, 2 invalid input.

#include <cmath>
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "spinors/scenario.hpp"

namespace {

using namespace spinors;

int cmd_check(const std::string& suite, uint64_t seed) {
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = run_all_suites(seed);
  } else {
    if (!is_suite_name(suite)) {
      std::cerr << "unknown suite '" << suite << "'; available:";
      for (const auto& n : suite_names()) std::cerr << " " << n;
      std::cerr << " all\n";
      return 2;
    }
    reports.push_back(run_suite(suite, seed));
  }
  std::string text = format_reports(reports, seed);
  std::cout << text;
  for (const auto& rep : reports)
    if (!rep.passed()) return 1;
  return 0;
}

int cmd_transport(const std::string& path, const std::string& out) {
  Scenario sc = load_scenario_file(path);
  RunOutput run = run_transport_scenario(sc);
  write_file(out, run.csv);
  write_file(out + ".meta.json", run.metadata);
  for (const auto& c : run.checks)
    std::printf("%-4s %-36s residual %.3e  tol %.3e\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                c.residual, c.tolerance);
  std::printf("wrote %s (+.meta.json)\n", out.c_str());
  return run.passed() ? 0 : 1;
}

int cmd_frames(const std::string& path, const std::string& out) {
  Scenario sc = load_scenario_file(path);
  RunOutput run = run_frames_scenario(sc);
  write_file(out, run.csv);
  write_file(out + ".meta.json", run.metadata);
  for (const auto& c : run.checks)
    std::printf("%-4s %-36s residual %.3e  tol %.3e  %s\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                c.residual, c.tolerance, c.detail.c_str());
  std::printf("wrote %s (+.meta.json)\n", out.c_str());
  return run.passed() ? 0 : 1;
}

int cmd_precession(double radius, double omega, long steps, double tol) {
  if (std::abs(radius * omega) >= 1.0) {
    std::cerr << "precession: |omega * radius| must be < 1\n";
    return 2;
  }
  if (steps < 10) {
    std::cerr << "precession: need at least 10 steps\n";
    return 2;
  }
  Background bg = minkowski();
  Worldline orbit = circular_worldline(radius, omega);
  double v = radius * omega;
  double gamma = 1.0 / std::sqrt(1 - v * v);
  double T = circular_proper_period(radius, omega);

  TransportOptions opts;
  opts.s0 = 0;
  opts.s1 = T;
  opts.step = T / static_cast<double>(steps);
  opts.store_every = steps;

  Vec4d X0{0, 1, 0, 0};
  auto run = transport(orbit, bg, vector_state(X0), opts);
  Vec4d XT = vector_components(run.back());
  double angle = std::atan2(X0[1] * XT[2] - X0[2] * XT[1], X0[1] * XT[1] + X0[2] * XT[2]);
  double expect = -2 * M_PI * (gamma - 1);

  std::printf("v = %.6g, gamma = %.9g, proper period = %.9g\n", v, gamma, T);
  std::printf("rotation per orbit: measured %.12g rad, closed form %.12g rad\n", angle, expect);
  std::printf("difference %.3e (tol %.1e)\n", std::abs(angle - expect), tol);
  return std::abs(angle - expect) <= tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinor transport toolkit"};
  app.require_subcommand(1);

  std::string suite = "all";
  uint64_t seed = spinors::kDefaultCheckSeed;
  auto* check = app.add_subcommand("check", "run invariant suites");
  check->add_option("suite", suite, "suite name (default: all)");
  check->add_option("--seed", seed, "seed for the randomized checks");

  std::string transport_file, transport_out = "transport_out.csv";
  auto* tr = app.add_subcommand("transport", "integrate a transport scenario");
  tr->add_option("scenario", transport_file, "scenario JSON file")->required();
  tr->add_option("-o,--output", transport_out, "output CSV path");

  std::string frames_file, frames_out = "frames_out.csv";
  auto* fr = app.add_subcommand("frames", "Dirac frames along a worldline");
  fr->add_option("scenario", frames_file, "scenario JSON file")->required();
  fr->add_option("-o,--output", frames_out, "output CSV path");

  double radius = 0.6, omega = 1.0, tol = 1e-5;
  long steps = 10000;
  auto* pr = app.add_subcommand("precession", "circular-orbit spatial rotation per orbit");
  pr->add_option("--radius", radius, "orbit radius")->required();
  pr->add_option("--omega", omega, "angular velocity")->required();
  pr->add_option("--steps", steps, "integrator steps per orbit");
  pr->add_option("--tol", tol, "pass tolerance in radians");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(suite, seed);
    if (tr->parsed()) return cmd_transport(transport_file, transport_out);
    if (fr->parsed()) return cmd_frames(frames_file, frames_out);
    if (pr->parsed()) return cmd_precession(radius, omega, steps, tol);
  } catch (const spinors::ScenarioError& e) {
    std::cerr << "invalid scenario: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
