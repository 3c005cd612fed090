#include "spinors/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace spinors {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ScenarioError(path, "expected a number");
  return j.get<double>();
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ScenarioError(path, "expected a string");
  return j.get<std::string>();
}

Vec4d require_vec4(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) throw ScenarioError(path, "expected an array of 4 numbers");
  Vec4d v;
  for (int i = 0; i < 4; ++i) v[i] = require_number(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

cplx require_cplx(const json& j, const std::string& path) {
  // Complex numbers serialize as [re, im]; a bare number is accepted as purely real.
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2) throw ScenarioError(path, "expected [re, im]");
  return cplx(require_number(j[0], path + "[0]"), require_number(j[1], path + "[1]"));
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded()) throw ScenarioError("(document)", "not valid JSON");
  if (!root.is_object()) throw ScenarioError("(document)", "expected a JSON object");

  Scenario sc;
  if (root.contains("background")) {
    const json& bg = root["background"];
    if (!bg.is_object()) throw ScenarioError("background", "expected an object");
    sc.background_kind = require_string(bg.value("kind", json("minkowski")), "background.kind");
    if (sc.background_kind == "schwarzschild") {
      sc.mass_param = require_number(bg.value("mass", json(0.0)), "background.mass");
      if (sc.mass_param < 0) throw ScenarioError("background.mass", "must be nonnegative");
    } else if (sc.background_kind != "minkowski") {
      throw ScenarioError("background.kind", "unknown kind '" + sc.background_kind + "'");
    }
  }

  if (root.contains("worldline")) {
    const json& wl = root["worldline"];
    if (!wl.is_object()) throw ScenarioError("worldline", "expected an object");
    sc.worldline_kind = require_string(wl.value("kind", json("static")), "worldline.kind");
    if (sc.worldline_kind == "static") {
      if (wl.contains("position")) sc.position = require_vec4(wl["position"], "worldline.position");
    } else if (sc.worldline_kind == "circular") {
      sc.radius = require_number(wl.value("radius", json()), "worldline.radius");
      sc.omega = require_number(wl.value("omega", json()), "worldline.omega");
      if (std::abs(sc.radius * sc.omega) >= 1.0)
        throw ScenarioError("worldline", "circular orbit requires |omega * radius| < 1");
    } else if (sc.worldline_kind == "rindler") {
      sc.accel = require_number(wl.value("accel", json()), "worldline.accel");
      if (sc.accel == 0) throw ScenarioError("worldline.accel", "must be nonzero");
    } else {
      throw ScenarioError("worldline.kind", "unknown kind '" + sc.worldline_kind + "'");
    }
  }

  if (root.contains("transport")) {
    const json& tr = root["transport"];
    if (!tr.is_object()) throw ScenarioError("transport", "expected an object");
    sc.transport_kind = require_string(tr.value("kind", json("vector")), "transport.kind");
    if (sc.transport_kind != "vector" && sc.transport_kind != "two-spinor" &&
        sc.transport_kind != "four-spinor")
      throw ScenarioError("transport.kind", "unknown kind '" + sc.transport_kind + "'");
    if (tr.contains("initial")) {
      if (!tr["initial"].is_array()) throw ScenarioError("transport.initial", "expected an array");
      for (size_t i = 0; i < tr["initial"].size(); ++i)
        sc.initial.push_back(
            require_cplx(tr["initial"][i], "transport.initial[" + std::to_string(i) + "]"));
    }
    sc.s0 = require_number(tr.value("s0", json(0.0)), "transport.s0");
    sc.s1 = require_number(tr.value("s1", json(1.0)), "transport.s1");
    sc.step = require_number(tr.value("step", json(1e-3)), "transport.step");
    if (sc.step <= 0) throw ScenarioError("transport.step", "must be > 0");
    if (tr.contains("alpha")) {
      const json& al = tr["alpha"];
      if (al.is_number()) {
        sc.alpha_const = al.get<double>();
      } else if (al.is_array()) {
        sc.alpha_is_table = true;
        for (size_t i = 0; i < al.size(); ++i) {
          const json& row = al[i];
          std::string p = "transport.alpha[" + std::to_string(i) + "]";
          if (!row.is_array() || row.size() != 2) throw ScenarioError(p, "expected [s, alpha]");
          sc.alpha_table.emplace_back(require_number(row[0], p + "[0]"),
                                      require_number(row[1], p + "[1]"));
        }
        if (sc.alpha_table.size() < 2)
          throw ScenarioError("transport.alpha", "table needs at least 2 rows");
      } else {
        throw ScenarioError("transport.alpha", "expected a number or a table of [s, alpha]");
      }
    }
  }

  if (root.contains("output")) {
    const json& out = root["output"];
    if (!out.is_object()) throw ScenarioError("output", "expected an object");
    if (out.contains("samples")) {
      double s = require_number(out["samples"], "output.samples");
      if (s < 1 || s != std::floor(s)) throw ScenarioError("output.samples", "must be a positive integer");
      sc.samples = static_cast<int>(s);
    }
  }

  if (root.contains("mass")) {
    sc.mass = require_number(root["mass"], "mass");
    if (sc.mass <= 0) throw ScenarioError("mass", "must be positive");
  }
  if (root.contains("momenta")) {
    if (!root["momenta"].is_array()) throw ScenarioError("momenta", "expected an array");
    for (size_t i = 0; i < root["momenta"].size(); ++i)
      sc.momenta.push_back(require_vec4(root["momenta"][i], "momenta[" + std::to_string(i) + "]"));
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("(file)", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

Background make_background(const Scenario& sc) {
  if (sc.background_kind == "schwarzschild") return schwarzschild_like(sc.mass_param);
  return minkowski();
}

Worldline make_worldline(const Scenario& sc, const Background& bg) {
  if (sc.worldline_kind == "circular") {
    if (sc.background_kind != "minkowski")
      throw ScenarioError("worldline.kind", "circular orbits are defined on flat space");
    return circular_worldline(sc.radius, sc.omega);
  }
  if (sc.worldline_kind == "rindler") {
    if (sc.background_kind != "minkowski")
      throw ScenarioError("worldline.kind", "rindler motion is defined on flat space");
    return rindler_worldline(sc.accel);
  }
  return static_worldline(bg, sc.position);
}

TransportOptions make_transport_options(const Scenario& sc) {
  TransportOptions opts;
  opts.s0 = sc.s0;
  opts.s1 = sc.s1;
  opts.step = sc.step;
  long steps = std::lround(std::ceil(std::abs(sc.s1 - sc.s0) / sc.step));
  opts.store_every = std::max(1L, steps / std::max(1, sc.samples));
  if (sc.alpha_is_table) {
    auto table = sc.alpha_table;
    opts.alpha = [table](double s) {
      if (s <= table.front().first) return table.front().second;
      if (s >= table.back().first) return table.back().second;
      for (size_t i = 1; i < table.size(); ++i)
        if (s <= table[i].first) {
          double t = (s - table[i - 1].first) / (table[i].first - table[i - 1].first);
          return table[i - 1].second + t * (table[i].second - table[i - 1].second);
        }
      return table.back().second;
    };
  } else if (sc.alpha_const != 0.0) {
    double a = sc.alpha_const;
    opts.alpha = [a](double) { return a; };
  }
  return opts;
}

TransportState make_initial_state(const Scenario& sc) {
  if (sc.transport_kind == "vector") {
    if (sc.initial.size() != 4)
      throw ScenarioError("transport.initial", "vector transport needs 4 components");
    for (size_t i = 0; i < 4; ++i)
      if (sc.initial[i].imag() != 0.0)
        throw ScenarioError("transport.initial[" + std::to_string(i) + "]",
                            "vector components must be real");
    return vector_state({sc.initial[0].real(), sc.initial[1].real(), sc.initial[2].real(),
                         sc.initial[3].real()});
  }
  if (sc.transport_kind == "two-spinor") {
    if (sc.initial.size() != 2)
      throw ScenarioError("transport.initial", "two-spinor transport needs 2 components");
    return two_spinor_state({sc.initial[0], sc.initial[1]});
  }
  if (sc.initial.size() != 4)
    throw ScenarioError("transport.initial", "four-spinor transport needs 4 components");
  return four_spinor_state(DiracSpinor{{sc.initial[0], sc.initial[1], sc.initial[2],
                                        sc.initial[3]}});
}

bool RunOutput::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// Reported pairing per transport kind: g(X,X), the observer norm |u|^2, or k(psi,psi).
// The first and last are conserved along the transport; a single 2-spinor has no
// quadratic invariant (boosts rescale the observer norm), so its conservation check
// goes through the induced null vector instead.
double state_pairing(const TransportState& st) {
  switch (st.kind) {
    case TransportKind::vector_h: {
      Vec4d x = vector_components(st);
      return minkowski_dot(x, x);
    }
    case TransportKind::two_spinor:
      return std::norm(st.components[0]) + std::norm(st.components[1]);
    case TransportKind::four_spinor: {
      DiracSpinor psi{st.components};
      return k_product(psi, psi).real();
    }
  }
  return 0;
}

const char* pairing_column(TransportKind kind) {
  switch (kind) {
    case TransportKind::vector_h: return "g_norm";
    case TransportKind::two_spinor: return "observer_norm";
    case TransportKind::four_spinor: return "k_norm";
  }
  return "pairing";
}

// Spatial direction used for the accumulated-rotation column.
Vec4d rotation_direction(const TransportState& st) {
  if (st.kind == TransportKind::vector_h) return vector_components(st);
  Vec2c u;
  if (st.kind == TransportKind::two_spinor) {
    u = {st.components[0], st.components[1]};
  } else {
    u = DiracSpinor{st.components}.u();
  }
  Mat2c w;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) w(a, b) = u[a] * std::conj(u[b]);
  return MinkVector::from_hermitian(w).pauli();
}

double unwrap_near(double angle, double previous) {
  while (angle - previous > M_PI) angle -= 2 * M_PI;
  while (angle - previous < -M_PI) angle += 2 * M_PI;
  return angle;
}

}  // namespace

RunOutput run_transport_scenario(const Scenario& sc) {
  Background bg = make_background(sc);
  Worldline line = make_worldline(sc, bg);
  TransportOptions opts = make_transport_options(sc);
  TransportState initial = make_initial_state(sc);

  auto run = transport(line, bg, initial, opts);

  // Step-halving rerun for the Richardson error estimate.
  TransportOptions half = opts;
  half.step = opts.step / 2;
  half.store_every = 2 * opts.store_every;
  auto run_half = transport(line, bg, initial, half);
  double richardson = max_abs_diff(run.back().components, run_half.back().components);

  bool circular = sc.worldline_kind == "circular";
  std::ostringstream csv;
  csv << "s";
  int n = component_count(initial.kind);
  if (initial.kind == TransportKind::vector_h) {
    for (int i = 0; i < n; ++i) csv << ",X" << i;
  } else {
    for (int i = 0; i < n; ++i) csv << ",re_c" << i + 1 << ",im_c" << i + 1;
  }
  csv << "," << pairing_column(initial.kind);
  if (circular) csv << ",rotation_angle";
  csv << "\n";

  // A 2-spinor run is checked against the vector transport of its null outer product.
  std::vector<TransportState> shadow;
  if (initial.kind == TransportKind::two_spinor) {
    Vec2c u0{initial.components[0], initial.components[1]};
    TransportOptions vopts = opts;
    vopts.alpha = nullptr;
    shadow = transport(line, bg, vector_state(null_from_spinor(TwoSpinor{u0}).pauli()), vopts);
  }

  double pairing0 = state_pairing(run.front());
  Vec4d dir0 = rotation_direction(run.front());
  double prev_angle = 0, worst_drift = 0, final_angle = 0;
  for (size_t idx = 0; idx < run.size(); ++idx) {
    const TransportState& st = run[idx];
    csv << num(st.s);
    if (st.kind == TransportKind::vector_h) {
      Vec4d x = vector_components(st);
      for (int i = 0; i < 4; ++i) csv << "," << num(x[i]);
    } else {
      for (int i = 0; i < n; ++i)
        csv << "," << num(st.components[i].real()) << "," << num(st.components[i].imag());
    }
    if (st.kind == TransportKind::two_spinor) {
      worst_drift = std::max(worst_drift,
                             max_abs_diff(rotation_direction(st), vector_components(shadow[idx])));
    } else {
      worst_drift = std::max(worst_drift, std::abs(state_pairing(st) - pairing0));
    }
    csv << "," << num(state_pairing(st));
    if (circular) {
      Vec4d d = rotation_direction(st);
      double raw = std::atan2(dir0[1] * d[2] - dir0[2] * d[1], dir0[1] * d[1] + dir0[2] * d[2]);
      prev_angle = unwrap_near(raw, prev_angle);
      final_angle = prev_angle;
      csv << "," << num(prev_angle);
    }
    csv << "\n";
  }

  RunOutput out;
  out.csv = csv.str();
  const char* drift_name = initial.kind == TransportKind::two_spinor
                               ? "transport/outer-product-vs-vector"
                               : "transport/invariant-drift";
  out.checks.push_back({drift_name, worst_drift, 1e-8, worst_drift <= 1e-8, ""});
  out.checks.push_back({"transport/richardson-estimate", richardson, 1e-6, richardson <= 1e-6,
                        "|final(h) - final(h/2)|"});

  json meta;
  meta["schema"] = "spintool/1";
  meta["kind"] = "transport";
  meta["background"] = sc.background_kind;
  meta["worldline"] = sc.worldline_kind;
  meta["transport"] = sc.transport_kind;
  meta["s0"] = sc.s0;
  meta["s1"] = sc.s1;
  meta["step"] = sc.step;
  meta["richardson_error"] = richardson;
  meta["invariant_drift"] = worst_drift;
  if (circular) {
    double v = sc.radius * sc.omega;
    double gamma = 1.0 / std::sqrt(1 - v * v);
    meta["gamma"] = gamma;
    meta["proper_period"] = circular_proper_period(sc.radius, sc.omega);
    meta["final_rotation_angle"] = final_angle;
    meta["thomas_angle_per_orbit"] = -2 * M_PI * (gamma - 1);
  }
  out.metadata = meta.dump(2) + "\n";
  return out;
}

RunOutput run_frames_scenario(const Scenario& sc) {
  Background bg = make_background(sc);
  Worldline line = make_worldline(sc, bg);
  TransportOptions opts = make_transport_options(sc);

  std::vector<MassShellMomentum> momenta;
  for (size_t i = 0; i < sc.momenta.size(); ++i) {
    try {
      momenta.emplace_back(sc.momenta[i], sc.mass);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("momenta[" + std::to_string(i) + "]", e.what());
    }
  }

  DiracFrame start = adapted_frame_at(bg, line, opts.s0, sc.mass);
  auto samples = frames_along_worldline(line, bg, start, momenta, opts);

  std::ostringstream csv;
  csv << "s,p_index";
  for (int i = 0; i < 4; ++i) csv << ",p" << i;
  const char* names[4] = {"u1", "u2", "v1", "v2"};
  for (int m = 0; m < 4; ++m)
    for (int c = 1; c <= 4; ++c) csv << ",re_" << names[m] << "_" << c << ",im_" << names[m]
                                     << "_" << c;
  csv << ",res_electron,res_positron\n";

  double worst = 0;
  for (const auto& smp : samples) {
    for (size_t pi = 0; pi < momenta.size(); ++pi) {
      const DiracFrame& f = smp.boosted[pi];
      csv << num(smp.s) << "," << pi;
      for (int i = 0; i < 4; ++i) csv << "," << num(momenta[pi].p()[i]);
      const DiracSpinor* members[4] = {&f.u[0], &f.u[1], &f.v[0], &f.v[1]};
      for (int m = 0; m < 4; ++m)
        for (int c = 0; c < 4; ++c)
          csv << "," << num(members[m]->w[c].real()) << "," << num(members[m]->w[c].imag());
      // Annihilation residuals of the electron and positron halves.
      EndW gp = gamma_momentum(momenta[pi]);
      EndW idw = identity_w();
      EndW minus = gp - cplx(sc.mass) * idw;
      EndW plus = gp + cplx(sc.mass) * idw;
      double re = std::max(max_abs(apply(minus, f.u[0]).w), max_abs(apply(minus, f.u[1]).w));
      double rp = std::max(max_abs(apply(plus, f.v[0]).w), max_abs(apply(plus, f.v[1]).w));
      worst = std::max(worst, std::max(re, rp));
      csv << "," << num(re) << "," << num(rp) << "\n";
    }
  }

  RunOutput out;
  out.csv = csv.str();
  out.checks.push_back({"frames/adaptedness-residual", worst, 1e-8, worst <= 1e-8,
                        std::to_string(momenta.size()) + " momenta, " +
                            std::to_string(samples.size()) + " samples"});

  json meta;
  meta["schema"] = "spintool/1";
  meta["kind"] = "frames";
  meta["background"] = sc.background_kind;
  meta["worldline"] = sc.worldline_kind;
  meta["mass"] = sc.mass;
  meta["momenta"] = json::array();
  for (const auto& m : momenta)
    meta["momenta"].push_back(json::array({m.p()[0], m.p()[1], m.p()[2], m.p()[3]}));
  meta["samples"] = samples.size();
  meta["worst_adaptedness_residual"] = worst;
  out.metadata = meta.dump(2) + "\n";
  return out;
}

std::string format_reports(const std::vector<SuiteReport>& reports, uint64_t seed) {
  std::ostringstream os;
  os << "spintool check (seed " << seed << ")\n";
  int failed = 0, total = 0;
  for (const auto& rep : reports) {
    for (const auto& r : rep.results) {
      ++total;
      if (!r.pass) ++failed;
      char line[256];
      std::snprintf(line, sizeof line, "%-4s %-42s residual %.3e  tol %.3e", r.pass ? "ok" : "FAIL",
                    r.name.c_str(), r.residual, r.tolerance);
      os << line;
      if (!r.detail.empty()) os << "  (" << r.detail << ")";
      os << "\n";
    }
  }
  os << (failed == 0 ? "PASS" : "FAIL") << ": " << (total - failed) << "/" << total
     << " checks passed\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace spinors
