// Free particle machinery: mass-shell momenta, the electron/positron splitting of the
// 4-spinor space, rest-frame Dirac bases, boosts with their spin lifts, and
// Fermi-transported Dirac frames along a detector worldline.
#pragma once

#include "spinors/fermi.hpp"

namespace spinors {

// Future-pointing covector on the mass shell: g#(p, p) = m^2 (1e-10 relative), p_0 > 0.
class MassShellMomentum {
 public:
  MassShellMomentum(const Vec4d& covector, double mass);

  const Vec4d& p() const { return p_; }
  double mass() const { return mass_; }
  Vec4d vector() const { return {p_[0], -p_[1], -p_[2], -p_[3]}; }  // index raised

 private:
  Vec4d p_{};
  double mass_ = 0;
};

// Clifford action of the momentum covector.
EndW gamma_momentum(const MassShellMomentum& p);

// Projectors (1/2)(1 +- gamma[p]/m) onto the positive and negative energy subspaces;
// each has rank 2 and they resolve the identity.
std::pair<EndW, EndW> energy_splitting(const MassShellMomentum& p);

// Frame (u_1, u_2, v_1, v_2) adapted to the splitting of a momentum.
struct DiracFrame {
  std::array<DiracSpinor, 2> u;
  std::array<DiracSpinor, 2> v;
};

// The Dirac-basis rest frame, adapted to p = m tau_0-flat:
// u_A = (1/sqrt2)(zeta_A, zbar^A), v_A = (1/sqrt2)(zeta_A, -zbar^A).
DiracFrame rest_dirac_basis();

// The unique boost taking tau to p-vector/m, together with its spin lift.
struct BoostLift {
  Mat4d Lambda;   // frame components of the boost
  Mat2c K;        // det K = 1, K (x) K-bar projects onto Lambda
  double sign;    // continuity choice relative to K = +1 at the identity
};

// Rotation-free boost with rapidity arccosh(g(tau, p#)/m); K is the exponential of the
// half-traced boost generator, the continuous branch from K = +1. Throws for
// past-pointing p or off-shell p.
BoostLift boost_for(const MinkVector& tau, const MassShellMomentum& p);

// Nearest-sign continuation along a sampled momentum path; records flips in `sign`.
std::vector<BoostLift> continuous_lift_path(const MinkVector& tau,
                                            const std::vector<MassShellMomentum>& path);

// The Lorentz matrix realized by K on H: columns are the Pauli components of
// K tau_lam K^dag. Used to verify that a lift projects onto its boost.
Mat4d lift_action(const Mat2c& K);

// Spin(W) action of a lift on a Dirac frame: K on the u slot, (K-bar*)^{-1} on the chi
// slot. Preserves k-products and maps the splitting of m tau-flat to that of p.
DiracSpinor apply_spin_lift(const Mat2c& K, const DiracSpinor& psi);
DiracFrame boosted_frame(const BoostLift& lift, const DiracFrame& rest);
DiracFrame dirac_frame(const MinkVector& tau, const MassShellMomentum& p, const DiracFrame& rest);

// One output row of a frames-along-worldline run.
struct FrameSample {
  double s = 0;
  MinkVector tau;                  // transported tangent at s
  DiracFrame rest;                 // Fermi-transported base frame, adapted to m tau-flat(s)
  std::vector<DiracFrame> boosted; // one frame per requested momentum
};

// Dirac frame adapted to the worldline tangent at s0: the canonical rest basis boosted
// from the frame time axis to tau(s0).
DiracFrame adapted_frame_at(const Background& bg, const Worldline& line, double s0, double mass);

// Fermi-transport the rest Dirac frame along the worldline (gauge alpha = 0) and boost
// it to each momentum in `momenta` (frame components, shared across samples) at every
// stored sample.
std::vector<FrameSample> frames_along_worldline(const Worldline& line, const Background& bg,
                                                const DiracFrame& rest_at_s0,
                                                const std::vector<MassShellMomentum>& momenta,
                                                const TransportOptions& opts);

// Largest annihilation residual max || (gamma[p] -+ m) (u_A | v_A) || of a frame.
double adaptedness_residual(const DiracFrame& frame, const MassShellMomentum& p);

}  // namespace spinors
