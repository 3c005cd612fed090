#include "spinors/backgrounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinors {

std::array<Mat2c, 4> Background::spinor_connection(const Vec4d& x) const {
  InducedScalars gy;
  if (dilaton.coeffs) gy.G = dilaton.coeffs(x);
  if (em_potential.coeffs) gy.Y = em_potential.coeffs(x);
  return reconstruct_spinor(gy, h_connection.coeffs(x));
}

Mat4d Background::chart_metric(const Vec4d& x) const {
  Mat4d th = tetrad.theta(x);
  Mat4d g;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double v = 0;
      for (int l = 0; l < 4; ++l) v += eta(l, l) * th(l, a) * th(l, b);
      g(a, b) = v;
    }
  return g;
}

Background minkowski() {
  Background bg;
  bg.name = "minkowski";
  bg.tetrad.theta = [](const Vec4d&) { return Mat4d::identity(); };
  bg.tetrad.dtheta = [](const Vec4d&) { return std::array<Mat4d, 4>{}; };
  bg.h_connection.coeffs = [](const Vec4d&) { return std::array<Mat4d, 4>{}; };
  bg.em_potential.coeffs = [](const Vec4d&) { return Vec4d{}; };
  bg.dilaton.coeffs = [](const Vec4d&) { return Vec4d{}; };
  return bg;
}

namespace {

double schwarzschild_f(double mass, double r) {
  if (r <= 2.0 * mass) throw std::domain_error("schwarzschild_like: at or inside the horizon");
  return std::sqrt(1.0 - 2.0 * mass / r);
}

}  // namespace

Background schwarzschild_like(double mass_param) {
  if (mass_param == 0.0) {
    Background bg = minkowski();
    bg.name = "schwarzschild";
    return bg;
  }
  const double M = mass_param;

  auto grad_f = [M](const Vec4d& x) {
    double r = std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    double f = schwarzschild_f(M, r);
    double fp = M / (r * r * f);  // df/dr
    return Vec4d{0.0, fp * x[1] / r, fp * x[2] / r, fp * x[3] / r};
  };

  Background bg;
  bg.name = "schwarzschild";
  bg.tetrad.theta = [M](const Vec4d& x) {
    double r = std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    Mat4d th = Mat4d::identity();
    th(0, 0) = schwarzschild_f(M, r);
    return th;
  };
  bg.tetrad.dtheta = [grad_f](const Vec4d& x) {
    Vec4d df = grad_f(x);
    std::array<Mat4d, 4> d{};
    for (int a = 1; a < 4; ++a) d[a](0, 0) = df[a];
    return d;
  };
  // Torsion-free connection of the static diagonal tetrad: a single boost block
  // with mixed components Gamma_t^0_i = Gamma_t^i_0 = -d_i f.
  bg.h_connection.coeffs = [M, grad_f](const Vec4d& x) {
    double r = std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    schwarzschild_f(M, r);  // horizon guard
    Vec4d df = grad_f(x);
    std::array<Mat4d, 4> gam{};
    for (int i = 1; i < 4; ++i) {
      gam[0](0, i) = -df[i];
      gam[0](i, 0) = -df[i];
    }
    return gam;
  };
  bg.em_potential.coeffs = [](const Vec4d&) { return Vec4d{}; };
  bg.dilaton.coeffs = [](const Vec4d&) { return Vec4d{}; };
  return bg;
}

HConnectionField levi_civita_h_connection(const TetradField& tetrad, double fd_step) {
  auto theta = tetrad.theta;
  auto dtheta = tetrad.dtheta;
  HConnectionField out;
  out.coeffs = [theta, dtheta, fd_step](const Vec4d& x) {
    Mat4d th = theta(x);
    if (std::abs(det(th)) < 1e-12)
      throw std::invalid_argument("levi_civita_h_connection: degenerate tetrad");
    Mat4d inv = inverse(th);

    std::array<Mat4d, 4> dth;
    if (dtheta) {
      dth = dtheta(x);
    } else {
      for (int a = 0; a < 4; ++a) dth[a] = fd_partial<Mat4d>(theta, x, a, fd_step);
    }

    // Structure functions in frame indices, first index lowered.
    double C[4][4][4];
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          double v = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              v += (dth[a](l, b) - dth[b](l, a)) * inv(a, m) * inv(b, n);
          C[l][m][n] = eta(l, l) * v;
        }

    // Solve the torsion-free condition for the lowered rotation coefficients.
    double W[4][4][4];
    for (int m = 0; m < 4; ++m)
      for (int l = 0; l < 4; ++l)
        for (int n = 0; n < 4; ++n)
          W[m][l][n] = -0.5 * (C[l][n][m] + C[n][m][l] - C[m][l][n]);

    std::array<Mat4d, 4> gam{};
    for (int a = 0; a < 4; ++a)
      for (int l = 0; l < 4; ++l)
        for (int n = 0; n < 4; ++n) {
          double v = 0;
          for (int m = 0; m < 4; ++m) v += th(m, a) * eta(l, l) * W[m][l][n];
          gam[a](l, n) = v;
        }
    return gam;
  };
  return out;
}

Worldline static_worldline(const Background& bg, const Vec4d& x0) {
  Mat4d g = bg.chart_metric(x0);
  double g00 = g(0, 0);
  if (g00 <= 0) throw std::invalid_argument("static_worldline: chart time direction not timelike");
  double tdot = 1.0 / std::sqrt(g00);
  Worldline w;
  w.position = [x0, tdot](double s) { return Vec4d{x0[0] + tdot * s, x0[1], x0[2], x0[3]}; };
  w.velocity = [tdot](double) { return Vec4d{tdot, 0, 0, 0}; };
  w.acceleration = [](double) { return Vec4d{}; };
  w.proper_time = true;
  return w;
}

Worldline circular_worldline(double radius, double omega) {
  double v = std::abs(omega * radius);
  if (v >= 1.0) throw std::invalid_argument("circular_worldline: omega*R must satisfy |omega R| < 1");
  double gamma = 1.0 / std::sqrt(1.0 - v * v);
  Worldline w;
  w.position = [=](double s) {
    double t = gamma * s;
    return Vec4d{t, radius * std::cos(omega * t), radius * std::sin(omega * t), 0.0};
  };
  w.velocity = [=](double s) {
    double t = gamma * s;
    return Vec4d{gamma, -gamma * radius * omega * std::sin(omega * t),
                 gamma * radius * omega * std::cos(omega * t), 0.0};
  };
  w.acceleration = [=](double s) {
    double t = gamma * s;
    double g2w2 = gamma * gamma * omega * omega;
    return Vec4d{0.0, -g2w2 * radius * std::cos(omega * t), -g2w2 * radius * std::sin(omega * t),
                 0.0};
  };
  w.proper_time = true;
  return w;
}

Worldline rindler_worldline(double accel) {
  if (accel == 0.0) throw std::invalid_argument("rindler_worldline: acceleration must be nonzero");
  double a = accel;
  Worldline w;
  w.position = [a](double s) {
    return Vec4d{std::sinh(a * s) / a, std::cosh(a * s) / a, 0.0, 0.0};
  };
  w.velocity = [a](double s) { return Vec4d{std::cosh(a * s), std::sinh(a * s), 0.0, 0.0}; };
  w.acceleration = [a](double s) {
    return Vec4d{a * std::sinh(a * s), a * std::cosh(a * s), 0.0, 0.0};
  };
  w.proper_time = true;
  return w;
}

double circular_proper_period(double radius, double omega) {
  double v = omega * radius;
  double gamma = 1.0 / std::sqrt(1.0 - v * v);
  return 2.0 * M_PI / (std::abs(omega) * gamma);
}

Worldline reparameterize_proper_time(const Worldline& curve, const Background& bg, double lam0,
                                     double lam1) {
  auto speed = [&curve, &bg](double lam) {
    Vec4d x = curve.position(lam);
    Vec4d v = curve.velocity(lam);
    Mat4d g = bg.chart_metric(x);
    double q = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) q += g(a, b) * v[a] * v[b];
    if (q <= 0) throw std::invalid_argument("reparameterize_proper_time: curve not timelike");
    return std::sqrt(q);
  };

  // Cumulative proper time by trapezoid refinement until 1e-10 relative.
  int n = 64;
  double total_prev = 0;
  std::vector<double> lam_grid, s_grid;
  for (int iter = 0; iter < 16; ++iter) {
    lam_grid.assign(n + 1, 0.0);
    s_grid.assign(n + 1, 0.0);
    double dl = (lam1 - lam0) / n;
    double acc = 0;
    double prev = speed(lam0);
    lam_grid[0] = lam0;
    for (int i = 1; i <= n; ++i) {
      double lam = lam0 + i * dl;
      double cur = speed(lam);
      acc += 0.5 * (prev + cur) * dl;
      prev = cur;
      lam_grid[i] = lam;
      s_grid[i] = acc;
    }
    if (iter > 0 && std::abs(acc - total_prev) <= 1e-10 * std::abs(acc)) break;
    total_prev = acc;
    n *= 2;
  }

  auto base_pos = curve.position;
  auto base_vel = curve.velocity;
  auto lam_of_s = [lam_grid, s_grid, speed](double s) {
    auto it = std::lower_bound(s_grid.begin(), s_grid.end(), s);
    size_t i = std::min<size_t>(std::max<ptrdiff_t>(it - s_grid.begin(), 1), s_grid.size() - 1);
    double t = (s - s_grid[i - 1]) / (s_grid[i] - s_grid[i - 1]);
    double lam = lam_grid[i - 1] + t * (lam_grid[i] - lam_grid[i - 1]);
    for (int k = 0; k < 4; ++k) {  // Newton polish on s(lam) - s = 0
      double ds = (s_grid[i - 1] + (lam - lam_grid[i - 1]) * 0.5 *
                                       (speed(lam) + speed(lam_grid[i - 1]))) -
                  s;
      lam -= ds / speed(lam);
    }
    return lam;
  };

  Worldline out;
  out.position = [base_pos, lam_of_s](double s) { return base_pos(lam_of_s(s)); };
  out.velocity = [base_vel, lam_of_s, speed](double s) {
    double lam = lam_of_s(s);
    return (1.0 / speed(lam)) * base_vel(lam);
  };
  out.proper_time = true;
  return out;
}

}  // namespace spinors
