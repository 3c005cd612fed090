#include "spinors/suites.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "spinors/free_states.hpp"

namespace spinors {

namespace {

double uniform(std::mt19937_64& g, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

cplx random_cplx(std::mt19937_64& g) { return {uniform(g), uniform(g)}; }

Mat2c random_mat2(std::mt19937_64& g) {
  Mat2c m;
  for (auto& v : m.a) v = random_cplx(g);
  return m;
}

Vec2c random_vec2(std::mt19937_64& g) { return {random_cplx(g), random_cplx(g)}; }

Vec4d random_vec4d(std::mt19937_64& g) {
  return {uniform(g), uniform(g), uniform(g), uniform(g)};
}

MinkVector random_mink_normalized(std::mt19937_64& g) {
  MinkVector w = MinkVector::from_pauli(random_vec4d(g));
  double q = g_bilinear(w, w);
  if (std::abs(q) > 0.1) w = (1.0 / std::sqrt(std::abs(q))) * w;
  return w;
}

Mat4d random_antisymmetric(std::mt19937_64& g) {
  Mat4d m;
  for (int l = 0; l < 4; ++l)
    for (int mu = l + 1; mu < 4; ++mu) {
      double v = uniform(g);
      m(l, mu) = v;
      m(mu, l) = -v;
    }
  return m;
}

MassShellMomentum random_momentum(std::mt19937_64& g, double m) {
  double chi = uniform(g, 0, 2.0);
  double cth = uniform(g, -1, 1);
  double ph = uniform(g, 0, 2 * M_PI);
  double sth = std::sqrt(1 - cth * cth);
  double sh = std::sinh(chi), ch = std::cosh(chi);
  return MassShellMomentum(
      {m * ch, -m * sh * sth * std::cos(ph), -m * sh * sth * std::sin(ph), -m * sh * cth}, m);
}

CheckResult bound_check(std::string name, double residual, double tolerance,
                        std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
  r.detail = std::move(detail);
  return r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// ---------------------------------------------------------------------------

SuiteReport suite_clifford(uint64_t seed) {
  std::mt19937_64 g(seed ^ 0x1001);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    MinkVector y = random_mink_normalized(g);
    MinkVector y2 = random_mink_normalized(g);
    worst = std::max(worst, max_abs(clifford_defect(y.tensor(), y2.tensor()).m));
  }
  return {"clifford", {bound_check("clifford/defect-max-1000-pairs", worst, 1e-12)}};
}

SuiteReport suite_pauli_gram(uint64_t) {
  auto tau = pauli_basis();
  double worst = 0;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) {
      double expect = (l == m) ? (l == 0 ? 1.0 : -1.0) : 0.0;
      worst = std::max(worst, std::abs(g_bilinear(tau[l], tau[m]) - expect));
    }
  return {"pauli-gram", {bound_check("pauli-gram/diag(1,-1,-1,-1)", worst, 1e-14)}};
}

SuiteReport suite_null_cone(uint64_t seed) {
  std::mt19937_64 g(seed ^ 0x1002);
  double worst_null = 0, worst_rec = 0;
  for (int i = 0; i < 1000; ++i) {
    TwoSpinor u{random_vec2(g)};
    double sign = uniform(g) > 0 ? 1.0 : -1.0;
    MinkVector w = sign * null_from_spinor(u);
    worst_null = std::max(worst_null, std::abs(g_bilinear(w, w)));
    auto dec = null_decompose(w);
    if (!dec || dec->sign != sign) {
      worst_rec = 1.0;
      continue;
    }
    MinkVector re = dec->sign * null_from_spinor(dec->u);
    double scale = std::max(1.0, max_abs(w.herm()));
    worst_rec = std::max(worst_rec, max_abs_diff(re.herm(), w.herm()) / scale);
  }
  int wrong = 0, tested = 0;
  while (tested < 1000) {
    MinkVector w = MinkVector::from_pauli(random_vec4d(g));
    if (std::abs(g_bilinear(w, w)) < 0.1) continue;
    ++tested;
    if (null_decompose(w).has_value()) ++wrong;
  }
  SuiteReport rep{"null-cone", {}};
  rep.results.push_back(bound_check("null-cone/outer-product-null", worst_null, 1e-13));
  rep.results.push_back(bound_check("null-cone/recovery", worst_rec, 1e-10));
  rep.results.push_back(bound_check("null-cone/refusals", wrong, 0.5, "1000 non-null inputs"));
  return rep;
}

SuiteReport suite_connection_roundtrip(uint64_t seed) {
  std::mt19937_64 g(seed ^ 0x1003);
  double worst_rt = 0, worst_inv = 0;
  for (int i = 0; i < 1000; ++i) {
    std::array<Mat2c, 4> lam;
    for (auto& m : lam) m = random_mat2(g);
    auto scalars = induced_scalars(lam);
    auto h = induced_h_connection(lam);
    auto back = reconstruct_spinor(scalars, h);
    for (int a = 0; a < 4; ++a) {
      worst_rt = std::max(worst_rt, max_abs_diff(back[a], lam[a]));
      for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
          worst_inv =
              std::max(worst_inv, std::abs(eta(l, l) * h[a](l, m) + eta(m, m) * h[a](m, l)));
      double tr = h[a](0, 0) + h[a](1, 1) + h[a](2, 2) + h[a](3, 3);
      worst_inv = std::max(worst_inv, std::abs(tr));
    }
  }
  SuiteReport rep{"connection-roundtrip", {}};
  rep.results.push_back(bound_check("connection/roundtrip-1000", worst_rt, 1e-13));
  rep.results.push_back(bound_check("connection/induced-invariants", worst_inv, 1e-13));
  return rep;
}

SuiteReport suite_curvature(uint64_t seed) {
  std::mt19937_64 g(seed ^ 0x1004);
  // Smooth random trigonometric field.
  struct Term {
    Mat2c coeff;
    Vec4d wave;
    double phase;
  };
  std::vector<std::array<Term, 3>> terms(4);
  for (auto& ts : terms)
    for (auto& t : ts) {
      t.coeff = random_mat2(g);
      t.wave = random_vec4d(g);
      t.phase = uniform(g, -3, 3);
    }
  SpinorConnectionField field{[terms](const Vec4d& x) {
    std::array<Mat2c, 4> l{};
    for (int a = 0; a < 4; ++a)
      for (const auto& t : terms[a]) {
        double arg = t.phase;
        for (int i = 0; i < 4; ++i) arg += t.wave[i] * x[i];
        l[a] = l[a] + cplx(std::sin(arg)) * t.coeff;
      }
    return l;
  }};

  Vec4d x0{0.2, -0.1, 0.35, 0.6};
  double h = 0.05;
  double r1 = curvature_relation_check(ConnectionGrid2D::sample(field, x0, 0, 1, h, 17, 17));
  double r2 = curvature_relation_check(ConnectionGrid2D::sample(field, x0, 0, 1, h / 2, 17, 17));
  double ratio = r1 / r2;
  return {"curvature",
          {bound_check("curvature/step-halving-ratio", std::abs(ratio - 4.0), 0.3,
                       "residuals " + fmt(r1) + " -> " + fmt(r2))}};
}

SuiteReport suite_fermi_isometry(uint64_t) {
  Background bg = minkowski();
  double R = 0.6, om = 1.0;
  Worldline orbit = circular_worldline(R, om);
  double T = circular_proper_period(R, om);

  TransportOptions opts;
  opts.s0 = 0;
  opts.s1 = T;
  opts.step = T / 10000;
  opts.store_every = 250;

  Vec4d X0{0, 1, 0, 0}, Y0{0, 0, 0, 1};
  auto rx = transport(orbit, bg, vector_state(X0), opts);
  auto ry = transport(orbit, bg, vector_state(Y0), opts);
  double drift = 0;
  for (size_t i = 0; i < rx.size(); ++i) {
    Vec4d X = vector_components(rx[i]), Y = vector_components(ry[i]);
    drift = std::max(drift, std::abs(minkowski_dot(X, Y) - minkowski_dot(X0, Y0)));
    drift = std::max(drift, std::abs(minkowski_dot(X, X) - minkowski_dot(X0, X0)));
  }

  auto X = [](double s) {
    return Vec4d{std::sin(1.3 * s), std::cos(0.7 * s), 0.4 * s, std::sin(2.1 * s)};
  };
  auto Y = [](double s) {
    return Vec4d{std::cos(0.9 * s), 0.8, std::sin(1.7 * s), std::cos(0.4 * s)};
  };
  double p1 = product_rule_residual(orbit, bg, X, Y, 0.9, 0.02);
  double p2 = product_rule_residual(orbit, bg, X, Y, 0.9, 0.01);
  double ratio = p1 / p2;

  SuiteReport rep{"fermi-isometry", {}};
  rep.results.push_back(bound_check("fermi/isometry-drift-one-orbit", drift, 1e-8));
  rep.results.push_back(bound_check("fermi/product-rule-ratio", std::abs(ratio - 4.0), 0.5,
                                    "residuals " + fmt(p1) + " -> " + fmt(p2)));
  return rep;
}

SuiteReport suite_thomas(uint64_t) {
  Background bg = minkowski();
  double R = 0.6, om = 1.0;
  double gamma = 1.0 / std::sqrt(1 - R * R * om * om);
  Worldline orbit = circular_worldline(R, om);
  double T = circular_proper_period(R, om);

  TransportOptions opts;
  opts.s0 = 0;
  opts.s1 = T;
  opts.step = T / 10000;
  opts.store_every = 10000;

  Vec4d X0{0, 1, 0, 0};
  auto run = transport(orbit, bg, vector_state(X0), opts);
  Vec4d XT = vector_components(run.back());
  double angle = std::atan2(X0[1] * XT[2] - X0[2] * XT[1], X0[1] * XT[1] + X0[2] * XT[2]);
  double expect = -2 * M_PI * (gamma - 1);
  return {"thomas",
          {bound_check("thomas/rotation-per-orbit", std::abs(angle - expect), 1e-6,
                       "measured " + fmt(angle) + " rad, closed form " + fmt(expect))}};
}

SuiteReport suite_fermi_compat(uint64_t) {
  Background bg = minkowski();
  double R = 0.6, om = 1.0;
  Worldline orbit = circular_worldline(R, om);
  double T = circular_proper_period(R, om);

  SuiteReport rep{"fermi-compat", {}};
  for (double a : {0.0, 0.7}) {
    TransportOptions opts;
    opts.s0 = 0;
    opts.s1 = T;
    opts.step = T / 10000;
    opts.store_every = 500;
    if (a != 0.0) opts.alpha = [a](double) { return a; };

    Vec2c u0{cplx(1.0, 0.0), cplx(0.4, -0.3)};
    auto spin_run = transport(orbit, bg, two_spinor_state(u0), opts);
    TransportOptions vopts = opts;
    vopts.alpha = nullptr;
    auto vec_run =
        transport(orbit, bg, vector_state(null_from_spinor(TwoSpinor{u0}).pauli()), vopts);

    double worst = 0;
    for (size_t i = 0; i < spin_run.size(); ++i) {
      Vec2c u{spin_run[i].components[0], spin_run[i].components[1]};
      Mat2c w;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) w(x, y) = u[x] * std::conj(u[y]);
      worst = std::max(worst, max_abs_diff(MinkVector::from_hermitian(w).pauli(),
                                           vector_components(vec_run[i])));
    }
    char label[64];
    std::snprintf(label, sizeof label, "fermi-compat/outer-product-alpha-%g", a);
    rep.results.push_back(bound_check(label, worst, 1e-8));
  }
  return rep;
}

SuiteReport suite_gauge(uint64_t) {
  Background bg = minkowski();
  double R = 0.6, om = 1.0, a = 0.7;
  Worldline orbit = circular_worldline(R, om);
  double T = circular_proper_period(R, om);

  TransportOptions base;
  base.s0 = 0;
  base.s1 = T;
  base.step = T / 4000;
  base.store_every = 200;

  Vec2c u0{cplx(0.8, 0.1), cplx(-0.2, 0.55)};
  auto plain = transport(orbit, bg, two_spinor_state(u0), base);
  TransportOptions gauged = base;
  gauged.alpha = [a](double) { return a; };
  auto shifted = transport(orbit, bg, two_spinor_state(u0), gauged);

  double worst_phase = 0, worst_obs = 0;
  for (size_t i = 0; i < plain.size(); ++i) {
    cplx phase = std::exp(cplx(0, a * (plain[i].s - base.s0)));
    for (int k = 0; k < 2; ++k)
      worst_phase = std::max(worst_phase,
                             std::abs(shifted[i].components[k] - phase * plain[i].components[k]));
    Mat2c wp, ws;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        wp(x, y) = plain[i].components[x] * std::conj(plain[i].components[y]);
        ws(x, y) = shifted[i].components[x] * std::conj(shifted[i].components[y]);
      }
    worst_obs = std::max(worst_obs, max_abs_diff(wp, ws));
  }
  SuiteReport rep{"gauge", {}};
  rep.results.push_back(bound_check("gauge/exact-phase-shift", worst_phase, 1e-10));
  rep.results.push_back(bound_check("gauge/vector-observables-unchanged", worst_obs, 1e-10));
  return rep;
}

SuiteReport suite_hat_gamma(uint64_t seed) {
  std::mt19937_64 g(seed ^ 0x1005);
  double worst_id = 0, worst_tr = 0;
  for (int i = 0; i < 400; ++i) {
    Bivector b{random_antisymmetric(g)};
    Mat2c phi = half_trace_endh(lower_second_index(b.comps));
    worst_tr = std::max(worst_tr, std::abs(trace(phi)));
    Mat4c pair;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        pair(x, y) = phi(x, y);
        pair(x + 2, y + 2) = -std::conj(phi(y, x));
      }
    worst_id = std::max(worst_id, max_abs_diff((cplx(0.25) * hat_gamma(b)).m, pair));
  }
  SuiteReport rep{"hat-gamma", {}};
  rep.results.push_back(bound_check("hat-gamma/quarter-vs-half-trace-400", worst_id, 1e-12));
  rep.results.push_back(bound_check("hat-gamma/traceless", worst_tr, 1e-14));
  return rep;
}

SuiteReport suite_free_states(uint64_t seed) {
  std::mt19937_64 g(seed ^ 0x1006);
  auto tau0 = pauli_basis()[0];
  DiracFrame rest = rest_dirac_basis();

  double worst_proj = 0, worst_ann = 0, worst_cover = 0, worst_det = 0;
  for (int i = 0; i < 200; ++i) {
    MassShellMomentum p = random_momentum(g, 1.0);
    auto [P, Q] = energy_splitting(p);
    worst_proj = std::max({worst_proj, max_abs_diff((P * P).m, P.m),
                           max_abs_diff((P + Q).m, Mat4c::identity()),
                           std::abs(trace(P.m) - 2.0), std::abs(trace(Q.m) - 2.0)});
    BoostLift lift = boost_for(tau0, p);
    worst_det = std::max(worst_det, std::abs(det(lift.K) - cplx(1)));
    worst_cover = std::max(worst_cover, max_abs_diff(lift_action(lift.K), lift.Lambda));
    DiracFrame f = boosted_frame(lift, rest);
    worst_ann = std::max(worst_ann, adaptedness_residual(f, p));
  }

  // 100-sample rapidity ramp: the nearest-sign rule must never flip.
  std::vector<MassShellMomentum> path;
  for (int i = 0; i < 100; ++i) {
    double chi = 3.0 * i / 99.0;
    path.emplace_back(Vec4d{std::cosh(chi), -std::sinh(chi) * 0.6, -std::sinh(chi) * 0.8, 0},
                      1.0);
  }
  auto lifts = continuous_lift_path(tau0, path);
  int flips = 0;
  for (const auto& l : lifts)
    if (l.sign != 1.0) ++flips;

  SuiteReport rep{"free-states", {}};
  rep.results.push_back(bound_check("free-states/projector-rank2-200", worst_proj, 1e-10));
  rep.results.push_back(bound_check("free-states/frame-annihilation", worst_ann, 1e-10));
  rep.results.push_back(bound_check("free-states/double-cover", worst_cover, 1e-12));
  rep.results.push_back(bound_check("free-states/det-K", worst_det, 1e-12));
  rep.results.push_back(bound_check("free-states/ramp-sign-flips", flips, 0.5, "100 samples"));
  return rep;
}

SuiteReport suite_torsion(uint64_t) {
  double M = 0.3;
  Background bg = schwarzschild_like(M);
  Vec4d x{0.0, 5.0, 1.0, 0.5};

  // The torsion-free solver output (exact here thanks to the analytic tetrad
  // derivative) must drive the torsion residual to pure truncation error.
  HConnectionField lc = levi_civita_h_connection(bg.tetrad);
  TetradField fd_only;  // force finite differencing of the tetrad inside `torsion`
  fd_only.theta = bg.tetrad.theta;
  auto residual = [&](double h) {
    auto t = torsion(fd_only, lc, bg.dilaton, x, h);
    double r = 0;
    for (const auto& m : t.comps) r = std::max(r, max_abs(m));
    return r;
  };
  double r1 = residual(0.1), r2 = residual(0.05);
  double ratio = r1 / r2;

  // Zero mass must reproduce flat space exactly.
  Background sch0 = schwarzschild_like(0.0);
  Background mink = minkowski();
  double exact = 0;
  std::mt19937_64 g(7);
  for (int i = 0; i < 10; ++i) {
    Vec4d p = random_vec4d(g);
    exact = std::max(exact, max_abs_diff(sch0.tetrad.theta(p), mink.tetrad.theta(p)));
    auto a = sch0.h_connection.coeffs(p);
    auto b = mink.h_connection.coeffs(p);
    for (int d = 0; d < 4; ++d) exact = std::max(exact, max_abs_diff(a[d], b[d]));
  }

  SuiteReport rep{"torsion", {}};
  rep.results.push_back(bound_check("torsion/structure-equation-ratio", std::abs(ratio - 4.0),
                                    0.3, "residuals " + fmt(r1) + " -> " + fmt(r2)));
  rep.results.push_back(bound_check("torsion/zero-mass-is-flat", exact, 0.0, "exact equality"));
  return rep;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "clifford",     "pauli-gram",     "null-cone", "connection-roundtrip",
      "curvature",    "fermi-isometry", "thomas",    "fermi-compat",
      "gauge",        "hat-gamma",      "free-states", "torsion"};
  return names;
}

bool is_suite_name(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

SuiteReport run_suite(const std::string& name, uint64_t seed) {
  if (name == "clifford") return suite_clifford(seed);
  if (name == "pauli-gram") return suite_pauli_gram(seed);
  if (name == "null-cone") return suite_null_cone(seed);
  if (name == "connection-roundtrip") return suite_connection_roundtrip(seed);
  if (name == "curvature") return suite_curvature(seed);
  if (name == "fermi-isometry") return suite_fermi_isometry(seed);
  if (name == "thomas") return suite_thomas(seed);
  if (name == "fermi-compat") return suite_fermi_compat(seed);
  if (name == "gauge") return suite_gauge(seed);
  if (name == "hat-gamma") return suite_hat_gamma(seed);
  if (name == "free-states") return suite_free_states(seed);
  if (name == "torsion") return suite_torsion(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all_suites(uint64_t seed) {
  std::vector<SuiteReport> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, seed));
  return out;
}

}  // namespace spinors
