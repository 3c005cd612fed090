#include "doctest.h"
#include "spinors/backgrounds.hpp"
#include "test_helpers.hpp"

using namespace spinors;
using namespace spinors::testing;

TEST_CASE("minkowski background is flat") {
  Background bg = minkowski();
  Vec4d x{0.3, -1.2, 0.4, 2.0};
  CHECK(max_abs_diff(bg.tetrad.theta(x), Mat4d::identity()) == 0.0);
  auto gam = bg.h_connection.coeffs(x);
  for (const auto& m : gam) CHECK(max_abs(m) == 0.0);

  auto t = torsion(bg.tetrad, bg.h_connection, bg.dilaton, x, 1e-3);
  for (const auto& m : t.comps) CHECK(max_abs(m) < 1e-12);

  // Chart metric is the Minkowski form.
  Mat4d g = bg.chart_metric(x);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(g(a, b) == doctest::Approx(eta(a, b)));

  // Geodesics are straight lines: an inertial curve has vanishing transport bivector.
  SpinorConnectionField lam{[&bg](const Vec4d& p) { return bg.spinor_connection(p); }};
  auto grid = ConnectionGrid2D::sample(lam, x, 0, 1, 0.05, 9, 9);
  CHECK(curvature_relation_check(grid) < 1e-14);
}

TEST_CASE("schwarzschild_like reduces to minkowski at zero mass, exactly") {
  Background sch0 = schwarzschild_like(0.0);
  Background mink = minkowski();
  auto g = rng(41);
  for (int i = 0; i < 20; ++i) {
    Vec4d x = random_vec4d(g);
    CHECK(max_abs_diff(sch0.tetrad.theta(x), mink.tetrad.theta(x)) == 0.0);
    auto a = sch0.h_connection.coeffs(x);
    auto b = mink.h_connection.coeffs(x);
    for (int d = 0; d < 4; ++d) CHECK(max_abs_diff(a[d], b[d]) == 0.0);
    CHECK(max_abs_diff(sch0.em_potential.coeffs(x), mink.em_potential.coeffs(x)) == 0.0);
    CHECK(max_abs_diff(sch0.dilaton.coeffs(x), mink.dilaton.coeffs(x)) == 0.0);
  }
}

TEST_CASE("schwarzschild_like horizon guard") {
  Background bg = schwarzschild_like(0.5);
  CHECK_THROWS_AS(bg.tetrad.theta({0, 1.0, 0, 0}), std::domain_error);      // r = 2M exactly
  CHECK_THROWS_AS(bg.h_connection.coeffs({0, 0.5, 0, 0}), std::domain_error);  // inside
  CHECK_NOTHROW(bg.tetrad.theta({0, 3.0, 0, 0}));
}

TEST_CASE("levi_civita_h_connection solves the structure equation") {
  // Constant tetrad: zero connection.
  TetradField flat;
  flat.theta = [](const Vec4d&) {
    Mat4d th = Mat4d::identity();
    th(1, 1) = 2.0;
    th(2, 2) = 0.5;
    return th;
  };
  auto lc0 = levi_civita_h_connection(flat);
  auto g0 = lc0.coeffs({0.1, 0.2, 0.3, 0.4});
  for (const auto& m : g0) CHECK(max_abs(m) < 1e-10);

  // Static diagonal tetrad diag(f, 1, 1, 1): single boost block with chart
  // coefficients Gamma_t^0_i = Gamma_t^i_0 = -d_i f (hand-derived fixture).
  const double k1 = 0.3, k2 = -0.2;
  TetradField stat;
  stat.theta = [=](const Vec4d& x) {
    Mat4d th = Mat4d::identity();
    th(0, 0) = std::exp(k1 * x[1] + k2 * x[2]);
    return th;
  };
  auto lc = levi_civita_h_connection(stat, 1e-5);
  Vec4d x{0, 0.4, -0.7, 0.2};
  double f = std::exp(k1 * x[1] + k2 * x[2]);
  auto gam = lc.coeffs(x);
  CHECK(gam[0](0, 1) == doctest::Approx(-k1 * f).epsilon(1e-8));
  CHECK(gam[0](1, 0) == doctest::Approx(-k1 * f).epsilon(1e-8));
  CHECK(gam[0](0, 2) == doctest::Approx(-k2 * f).epsilon(1e-8));
  CHECK(max_abs(gam[1]) < 1e-8);
  CHECK(max_abs(gam[2]) < 1e-8);
  CHECK(max_abs(gam[3]) < 1e-8);

  // The resulting torsion vanishes to truncation error.
  CovectorField zero;
  auto t = torsion(stat, lc, zero, x, 1e-4);
  for (const auto& m : t.comps) CHECK(max_abs(m) < 1e-7);
}

TEST_CASE("schwarzschild connection closures agree with the generic solver") {
  double M = 0.3;
  Background bg = schwarzschild_like(M);
  auto numeric = levi_civita_h_connection(bg.tetrad, 1e-5);
  auto grf = rng(42);
  for (int i = 0; i < 10; ++i) {
    Vec4d x{uniform(grf, -1, 1), uniform(grf, 2, 6), uniform(grf, -3, 3), uniform(grf, -3, 3)};
    auto a = bg.h_connection.coeffs(x);
    auto b = numeric.coeffs(x);
    for (int d = 0; d < 4; ++d) CHECK(max_abs_diff(a[d], b[d]) < 1e-9);
  }

  // Torsion of the analytic connection is pure truncation error: second order in h.
  Vec4d x{0.0, 5.0, 1.0, 0.5};
  // Drop the analytic tetrad derivative so the torsion operator differentiates.
  TetradField fd_only;
  fd_only.theta = bg.tetrad.theta;
  auto residual = [&](double h) {
    auto t = torsion(fd_only, bg.h_connection, bg.dilaton, x, h);
    double r = 0;
    for (const auto& m : t.comps) r = std::max(r, max_abs(m));
    return r;
  };
  double r1 = residual(0.1), r2 = residual(0.05);
  CHECK(r1 > 1e-9);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.075));

  // Curvature relation residual of the induced spinor connection, second order. The
  // static field only populates the time direction, so the plane must include it.
  SpinorConnectionField lam{[&bg](const Vec4d& p) { return bg.spinor_connection(p); }};
  auto grid_h = ConnectionGrid2D::sample(lam, x, 0, 1, 0.05, 17, 17);
  auto grid_h2 = ConnectionGrid2D::sample(lam, x, 0, 1, 0.025, 17, 17);
  double c1 = curvature_relation_check(grid_h);
  double c2 = curvature_relation_check(grid_h2);
  CHECK(c1 > 1e-12);
  CHECK(c1 / c2 == doctest::Approx(4.0).epsilon(0.08));
}

TEST_CASE("static worldline in a static background") {
  Background mink = minkowski();
  Worldline w = static_worldline(mink, {0, 1, 2, 3});
  CHECK(max_abs_diff(w.velocity(0.7), Vec4d{1, 0, 0, 0}) == 0.0);
  CHECK(max_abs_diff(w.position(2.0), Vec4d{2, 1, 2, 3}) == 0.0);

  Background sch = schwarzschild_like(0.3);
  Vec4d x0{0, 4, 0, 0};
  Worldline ws = static_worldline(sch, x0);
  // Unit normalization of the tangent in the chart metric.
  Mat4d g = sch.chart_metric(x0);
  Vec4d v = ws.velocity(0);
  double q = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) q += g(a, b) * v[a] * v[b];
  CHECK(q == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("circular worldline: proper-time normalization and period") {
  double R = 0.6, om = 1.0;
  Worldline w = circular_worldline(R, om);
  double gamma = 1.0 / std::sqrt(1.0 - R * R * om * om);
  CHECK(circular_proper_period(R, om) == doctest::Approx(2 * M_PI / (om * gamma)));
  Background bg = minkowski();
  for (double s : {0.0, 0.37, 1.9, 4.4}) {
    Vec4d v = w.velocity(s);
    CHECK(minkowski_dot(v, v) == doctest::Approx(1.0).epsilon(1e-13));
    // Velocity is the s-derivative of position.
    double h = 1e-6;
    Vec4d num = (1.0 / (2 * h)) * (w.position(s + h) - w.position(s - h));
    CHECK(max_abs_diff(num, v) < 1e-8);
    Vec4d acc = (1.0 / (2 * h)) * (w.velocity(s + h) - w.velocity(s - h));
    CHECK(max_abs_diff(acc, w.acceleration(s)) < 1e-8);
  }
  (void)bg;
  // One proper period advances the phase by one full turn.
  double T = circular_proper_period(R, om);
  CHECK(max_abs_diff(w.position(T) - w.position(0), Vec4d{gamma * T, 0, 0, 0}) < 1e-12);

  CHECK_THROWS_AS(circular_worldline(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(circular_worldline(2.0, 0.6), std::invalid_argument);
}

TEST_CASE("rindler worldline is unit hyperbolic motion") {
  Worldline w = rindler_worldline(0.7);
  for (double s : {0.0, 0.5, -1.2, 3.0}) {
    Vec4d v = w.velocity(s);
    CHECK(minkowski_dot(v, v) == doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(rindler_worldline(0.0), std::invalid_argument);
}

TEST_CASE("proper-time reparameterization of a coordinate-time circular orbit") {
  double R = 0.5, om = 0.8;
  double v = om * R;
  double gamma = 1.0 / std::sqrt(1 - v * v);
  Worldline coord;  // parameterized by coordinate time
  coord.position = [=](double t) {
    return Vec4d{t, R * std::cos(om * t), R * std::sin(om * t), 0};
  };
  coord.velocity = [=](double t) {
    return Vec4d{1, -R * om * std::sin(om * t), R * om * std::cos(om * t), 0};
  };
  coord.proper_time = false;

  Background bg = minkowski();
  double t1 = 3 * 2 * M_PI / om;
  Worldline proper = reparameterize_proper_time(coord, bg, 0.0, t1);
  Worldline exact = circular_worldline(R, om);

  for (double s : {0.1, 1.0, 2.5, 5.0}) {
    CHECK(max_abs_diff(proper.position(s), exact.position(s)) < 1e-8);
    CHECK(max_abs_diff(proper.velocity(s), exact.velocity(s)) < 1e-7);
    Vec4d vv = proper.velocity(s);
    CHECK(minkowski_dot(vv, vv) == doctest::Approx(1.0).epsilon(1e-9));
  }
  (void)gamma;
}
