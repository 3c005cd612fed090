// Pluggable spacetime backgrounds (tetrad plus induced connection fields) and the
// canonical worldlines used by the transport experiments and the test suites.
#pragma once

#include <string>

#include "spinors/connection.hpp"

namespace spinors {

// Immutable bundle of background fields. All closures must be pure; concurrent
// evaluation is safe.
struct Background {
  std::string name;
  TetradField tetrad;
  HConnectionField h_connection;
  CovectorField em_potential;  // Y_a, defaults to zero
  CovectorField dilaton;       // G_a, defaults to zero

  std::array<Mat2c, 4> spinor_connection(const Vec4d& x) const;
  // Chart metric g_ab = eta_{lam mu} Theta_a^lam Theta_b^mu.
  Mat4d chart_metric(const Vec4d& x) const;
};

// Flat space: identity tetrad, all connection coefficients zero.
Background minkowski();

// Static curved test background in Cartesian-type chart (t, x, y, z):
// Theta = diag(f(r), 1, 1, 1) with f = sqrt(1 - 2M/r); the connection is the
// torsion-free solution, supplied in closed form. Evaluation at or inside r = 2M throws.
// mass_param = 0 reproduces minkowski() exactly.
Background schwarzschild_like(double mass_param);

// Torsion-free h-connection of a tetrad from the first structure equation (T = 0, G = 0).
// Uses the tetrad's analytic derivative when present, else centered differences at fd_step.
HConnectionField levi_civita_h_connection(const TetradField& tetrad, double fd_step = 1e-4);

// Proper-time parameterized timelike curve in a chart. position/velocity are mandatory;
// acceleration (d^2x/ds^2) is optional and enables fully analytic transport generators.
struct Worldline {
  std::function<Vec4d(double)> position;
  std::function<Vec4d(double)> velocity;
  std::function<Vec4d(double)> acceleration;
  bool proper_time = true;
};

// Static observer at fixed spatial chart position (time coordinate starts at x0[0]).
Worldline static_worldline(const Background& bg, const Vec4d& x0);
// Circular orbit of radius R and angular velocity omega in the z = 0 plane of flat
// space; requires |omega R| < 1.
Worldline circular_worldline(double radius, double omega);
// Uniformly accelerated hyperbolic motion along x with proper acceleration a, flat space.
Worldline rindler_worldline(double accel);

// Proper period of one circular orbit.
double circular_proper_period(double radius, double omega);

// Reparameterize a curve given with an arbitrary (non proper time) parameter on
// [lam0, lam1] by its proper time. The cumulative proper-time integral is computed by
// trapezoidal refinement to 1e-10 relative accuracy.
Worldline reparameterize_proper_time(const Worldline& curve, const Background& bg, double lam0,
                                     double lam1);

}  // namespace spinors
