#include "spinors/free_states.hpp"

#include <cmath>
#include <stdexcept>

namespace spinors {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

Vec4d normalize_unit_timelike(const MinkVector& tau) {
  Vec4d t = tau.pauli();
  double n = minkowski_dot(t, t);
  if (n <= 0 || t[0] <= 0)
    throw std::invalid_argument("boost_for: observer must be future-pointing timelike");
  return (1.0 / std::sqrt(n)) * t;
}

}  // namespace

MassShellMomentum::MassShellMomentum(const Vec4d& covector, double mass)
    : p_(covector), mass_(mass) {
  if (mass <= 0) throw std::invalid_argument("MassShellMomentum: mass must be positive");
  double q = minkowski_dot(covector, covector);
  if (std::abs(q - mass * mass) > 1e-10 * mass * mass)
    throw std::invalid_argument("MassShellMomentum: momentum is off the mass shell");
  if (covector[0] <= 0)
    throw std::invalid_argument("MassShellMomentum: momentum must be future-pointing");
}

EndW gamma_momentum(const MassShellMomentum& p) {
  return gamma(MinkVector::from_pauli(p.vector()));
}

std::pair<EndW, EndW> energy_splitting(const MassShellMomentum& p) {
  EndW gp = (cplx(1.0 / p.mass())) * gamma_momentum(p);
  EndW id = identity_w();
  return {cplx(0.5) * (id + gp), cplx(0.5) * (id - gp)};
}

DiracFrame rest_dirac_basis() {
  double s = 1.0 / kSqrt2;
  DiracFrame f;
  for (int A = 0; A < 2; ++A) {
    Vec2c e{};
    e[A] = s;
    f.u[A] = DiracSpinor::from_parts(e, e);
    Vec2c me{-e[0], -e[1]};
    f.v[A] = DiracSpinor::from_parts(e, me);
  }
  return f;
}

BoostLift boost_for(const MinkVector& tau, const MassShellMomentum& p) {
  Vec4d t = normalize_unit_timelike(tau);
  Vec4d n = (1.0 / p.mass()) * p.vector();

  double ch = minkowski_dot(t, n);  // cosh of the rapidity
  if (ch < 1.0) ch = 1.0;

  BoostLift lift;
  lift.sign = 1.0;

  // Rotation-free boost: X -> X - g(X, t+n)/(1 + g(t,n)) (t+n) + 2 g(X,t) n.
  Vec4d tn = t + n;
  Mat4d lam;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) {
      double x = (l == m) ? 1.0 : 0.0;
      x -= tn[l] * (eta(m, m) * tn[m]) / (1.0 + ch);
      x += 2.0 * n[l] * (eta(m, m) * t[m]);
      lam(l, m) = x;
    }
  lift.Lambda = lam;

  double chi = std::acosh(std::max(ch, 1.0));
  if (chi < 1e-12) {
    lift.K = Mat2c::identity();
    return lift;
  }

  // Generator of the boost plane, scaled by the rapidity, then half-traced to sl(2,C).
  double sh = std::sinh(chi);
  Vec4d m_dir = (1.0 / sh) * (n - ch * t);  // unit spacelike direction seen by t
  Mat4d gen;
  for (int l = 0; l < 4; ++l)
    for (int mu = 0; mu < 4; ++mu)
      gen(l, mu) = chi * (m_dir[l] * eta(mu, mu) * t[mu] - t[l] * eta(mu, mu) * m_dir[mu]);
  lift.K = exp_traceless(half_trace_endh(gen));
  return lift;
}

std::vector<BoostLift> continuous_lift_path(const MinkVector& tau,
                                            const std::vector<MassShellMomentum>& path) {
  std::vector<BoostLift> lifts;
  lifts.reserve(path.size());
  for (const auto& p : path) {
    BoostLift lift = boost_for(tau, p);
    if (!lifts.empty()) {
      const Mat2c& prev = lifts.back().K;
      double keep = max_abs_diff(lift.K, prev);
      double flip = max_abs(lift.K + prev);
      if (flip < keep) {
        lift.K = cplx(-1) * lift.K;
        lift.sign = -lifts.back().sign;
      } else {
        lift.sign = lifts.back().sign;
      }
    }
    lifts.push_back(lift);
  }
  return lifts;
}

Mat4d lift_action(const Mat2c& K) {
  auto tau = pauli_basis();
  Mat4d lam;
  for (int l = 0; l < 4; ++l) {
    Vec4d col = MinkVector::from_hermitian(K * tau[l].herm() * adjoint(K)).pauli();
    for (int m = 0; m < 4; ++m) lam(m, l) = col[m];
  }
  return lam;
}

DiracSpinor apply_spin_lift(const Mat2c& K, const DiracSpinor& psi) {
  Vec2c u = K * psi.u();
  // (K-bar*)^{-1} acts on chi columns as (K^{-1})^dag.
  Mat2c kinv_dag = adjoint(inverse(K));
  Vec2c chi = kinv_dag * psi.chi();
  return DiracSpinor::from_parts(u, chi);
}

DiracFrame boosted_frame(const BoostLift& lift, const DiracFrame& rest) {
  DiracFrame out;
  for (int A = 0; A < 2; ++A) {
    out.u[A] = apply_spin_lift(lift.K, rest.u[A]);
    out.v[A] = apply_spin_lift(lift.K, rest.v[A]);
  }
  return out;
}

DiracFrame dirac_frame(const MinkVector& tau, const MassShellMomentum& p, const DiracFrame& rest) {
  return boosted_frame(boost_for(tau, p), rest);
}

double adaptedness_residual(const DiracFrame& frame, const MassShellMomentum& p) {
  EndW gp = gamma_momentum(p);
  EndW id = identity_w();
  EndW minus = gp - cplx(p.mass()) * id;
  EndW plus = gp + cplx(p.mass()) * id;
  double r = 0;
  for (int A = 0; A < 2; ++A) {
    r = std::max(r, max_abs(apply(minus, frame.u[A]).w));
    r = std::max(r, max_abs(apply(plus, frame.v[A]).w));
  }
  return r;
}

DiracFrame adapted_frame_at(const Background& bg, const Worldline& line, double s0, double mass) {
  Vec4d tau = tangent_frame_components(bg, line, s0);
  Vec4d p_cov{mass * tau[0], -mass * tau[1], -mass * tau[2], -mass * tau[3]};
  MassShellMomentum p(p_cov, mass);
  auto tau0 = pauli_basis()[0];
  return dirac_frame(tau0, p, rest_dirac_basis());
}

std::vector<FrameSample> frames_along_worldline(const Worldline& line, const Background& bg,
                                                const DiracFrame& rest_at_s0,
                                                const std::vector<MassShellMomentum>& momenta,
                                                const TransportOptions& opts) {
  // Transport the four frame members as 4-spinors with gauge alpha = 0.
  TransportOptions topts = opts;
  topts.alpha = nullptr;

  std::array<std::vector<TransportState>, 4> runs;
  std::array<DiracSpinor, 4> members{rest_at_s0.u[0], rest_at_s0.u[1], rest_at_s0.v[0],
                                     rest_at_s0.v[1]};
  for (int i = 0; i < 4; ++i)
    runs[i] = transport(line, bg, four_spinor_state(members[i], opts.s0), topts);

  size_t nsamples = runs[0].size();
  std::vector<FrameSample> out;
  out.reserve(nsamples);
  for (size_t k = 0; k < nsamples; ++k) {
    FrameSample smp;
    smp.s = runs[0][k].s;
    FermiData fd = fermi_data(line, smp.s, bg);
    smp.tau = fd.tau;
    smp.rest.u[0] = DiracSpinor{runs[0][k].components};
    smp.rest.u[1] = DiracSpinor{runs[1][k].components};
    smp.rest.v[0] = DiracSpinor{runs[2][k].components};
    smp.rest.v[1] = DiracSpinor{runs[3][k].components};
    smp.boosted.reserve(momenta.size());
    for (const auto& p : momenta) smp.boosted.push_back(dirac_frame(smp.tau, p, smp.rest));
    out.push_back(std::move(smp));
  }
  return out;
}

}  // namespace spinors
