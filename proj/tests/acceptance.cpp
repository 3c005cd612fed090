// Acceptance runner: executes every suite at its pinned tolerance and prints one
// pass/fail line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>

#include "spinors/scenario.hpp"

using namespace spinors;

namespace {

struct Criterion {
  const char* label;
  const char* suite;
};

// Ordered list of acceptance criteria and the suite implementing each.
const Criterion kCriteria[] = {
    {"Clifford relation, 1000 Hermitian pairs <= 1e-12", "clifford"},
    {"Pauli Gram matrix diag(1,-1,-1,-1) <= 1e-14", "pauli-gram"},
    {"Null-cone characterization, 1000 + 1000 samples", "null-cone"},
    {"Connection roundtrip <= 1e-13, induced invariants", "connection-roundtrip"},
    {"Curvature relation converges at order 2 (ratio 4 +- 0.3)", "curvature"},
    {"Fermi isometry <= 1e-8 per orbit; product rule O(h^2)", "fermi-isometry"},
    {"Thomas precession 2 pi (gamma - 1) retrograde <= 1e-6 rad", "thomas"},
    {"Spinor-vector transport compatibility <= 1e-8 (alpha 0, 0.7)", "fermi-compat"},
    {"Gauge family: exact phase shift, invariant observables", "gauge"},
    {"Quarter hat-gamma equals the half-trace pair <= 1e-12", "hat-gamma"},
    {"Free-state frames: projectors, adaptedness, double cover", "free-states"},
    {"Torsion-free construction: O(h^2) residual; flat limit exact", "torsion"},
};

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  int index = 0;
  for (const auto& c : kCriteria) {
    ++index;
    SuiteReport rep = run_suite(c.suite, kDefaultCheckSeed);
    bool pass = rep.passed();
    double worst = 0, tol = 0;
    for (const auto& r : rep.results) {
      if (!r.pass || worst == 0) {
        if (!r.pass || r.residual >= worst) {
          worst = r.residual;
          tol = r.tolerance;
        }
      }
    }
    std::printf("[%2d] %s  %-62s  worst %.3e (tol %.3e)\n", index, pass ? "PASS" : "FAIL",
                c.label, worst, tol);
    if (!pass) {
      ++failures;
      for (const auto& r : rep.results)
        if (!r.pass)
          std::printf("     FAIL %-42s residual %.6e tol %.3e %s\n", r.name.c_str(), r.residual,
                      r.tolerance, r.detail.c_str());
    }
  }
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/%d criteria passed in %.1f s\n",
              static_cast<int>(std::size(kCriteria)) - failures,
              static_cast<int>(std::size(kCriteria)), dt);
  return failures == 0 ? 0 : 1;
}
