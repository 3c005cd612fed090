#include "spinors/fermi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinors {

namespace {

// Frame components of the tangent: tau^lam = Theta_a^lam xdot^a.
Vec4d tangent_frame(const Mat4d& theta, const Vec4d& xdot) { return theta * xdot; }

// d tau^lam / ds along the curve, analytic when the background and worldline provide
// derivatives, else centered differences in s.
Vec4d tangent_frame_derivative(const Worldline& line, double s, const Background& bg) {
  Vec4d x = line.position(s);
  Vec4d v = line.velocity(s);
  if (line.acceleration && bg.tetrad.dtheta) {
    Vec4d acc = line.acceleration(s);
    auto dth = bg.tetrad.dtheta(x);
    Mat4d th = bg.tetrad.theta(x);
    Vec4d r = th * acc;
    for (int a = 0; a < 4; ++a) r = r + v[a] * (dth[a] * v);
    return r;
  }
  double h = 1e-5;
  auto tau_of = [&](double sp) {
    return tangent_frame(bg.tetrad.theta(line.position(sp)), line.velocity(sp));
  };
  return (1.0 / (2.0 * h)) * (tau_of(s + h) - tau_of(s - h));
}

// Connection matrices contracted along the chart velocity.
Mat4d contract_h_connection(const Background& bg, const Vec4d& x, const Vec4d& xdot) {
  auto gam = bg.h_connection.coeffs(x);
  Mat4d r;
  for (int a = 0; a < 4; ++a)
    if (xdot[a] != 0.0) r = r + xdot[a] * gam[a];
  return r;
}

}  // namespace

int component_count(TransportKind kind) {
  switch (kind) {
    case TransportKind::vector_h: return 4;
    case TransportKind::two_spinor: return 2;
    case TransportKind::four_spinor: return 4;
  }
  return 4;
}

Vec4d tangent_frame_components(const Background& bg, const Worldline& line, double s) {
  return tangent_frame(bg.tetrad.theta(line.position(s)), line.velocity(s));
}

FermiData fermi_data(const Worldline& line, double s, const Background& bg) {
  Vec4d x = line.position(s);
  Vec4d v = line.velocity(s);
  Mat4d th = bg.tetrad.theta(x);
  Vec4d tau = tangent_frame(th, v);

  double norm2 = minkowski_dot(tau, tau);
  if (norm2 <= 0) throw std::invalid_argument("fermi_data: tangent is not timelike");

  // nabla_v tau in frame components: d tau/ds - Gamma~(v) tau.
  Vec4d dtau = tangent_frame_derivative(line, s, bg);
  Mat4d gam_v = contract_h_connection(bg, x, v);
  Vec4d a = dtau - gam_v * tau;

  FermiData fd;
  fd.tau = MinkVector::from_pauli(tau);
  fd.nabla_tau = MinkVector::from_pauli(a);

  if (max_abs(a) < 1e-14) {  // geodesic within noise: plain parallel transport
    fd.Phi = Bivector{};
    fd.Phi_flat = Mat4d::zero();
    fd.phi = Mat2c::zero();
    return fd;
  }

  // Phi = 2 a ^ tau as a tensor; mixed components of the lowering; half trace.
  Mat4d raised;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) raised(l, m) = a[l] * tau[m] - a[m] * tau[l];
  fd.Phi = Bivector{raised};
  fd.Phi_flat = lower_second_index(raised);
  fd.phi = half_trace_endh(fd.Phi_flat);
  return fd;
}

MinkVector fermi_derivative(const Worldline& line, const Background& bg,
                            const std::function<Vec4d(double)>& X, double s, double h) {
  FermiData fd = fermi_data(line, s, bg);
  Vec4d x = line.position(s);
  Vec4d v = line.velocity(s);
  Vec4d Xs = X(s);
  Vec4d dX = (1.0 / (2.0 * h)) * (X(s + h) - X(s - h));
  Vec4d nabla = dX - contract_h_connection(bg, x, v) * Xs;

  Vec4d tau = fd.tau.pauli();
  Vec4d a = fd.nabla_tau.pauli();
  Vec4d d = nabla + minkowski_dot(a, Xs) * tau - minkowski_dot(tau, Xs) * a;
  return MinkVector::from_pauli(d);
}

double product_rule_residual(const Worldline& line, const Background& bg,
                             const std::function<Vec4d(double)>& X,
                             const std::function<Vec4d(double)>& Y, double s, double h) {
  auto gXY = [&](double sp) { return minkowski_dot(X(sp), Y(sp)); };
  double lhs = (gXY(s + h) - gXY(s - h)) / (2.0 * h);
  Vec4d dx = fermi_derivative(line, bg, X, s, h).pauli();
  Vec4d dy = fermi_derivative(line, bg, Y, s, h).pauli();
  double rhs = minkowski_dot(dx, Y(s)) + minkowski_dot(X(s), dy);
  return std::abs(lhs - rhs);
}

Mat4d vector_transport_generator(const Worldline& line, double s, const Background& bg) {
  FermiData fd = fermi_data(line, s, bg);
  Mat4d gam_v = contract_h_connection(bg, line.position(s), line.velocity(s));
  return gam_v + fd.Phi_flat;
}

Mat2c spinor_fermi_coefficients(const FermiData& fd, const Mat2c& lambda_tau, double alpha) {
  return lambda_tau + fd.phi + cplx(0, alpha) * Mat2c::identity();
}

Mat4c four_spinor_fermi_coefficients(const FermiData& fd, const Mat2c& lambda_tau, double alpha) {
  Mat2c L = lambda_tau + fd.phi;
  Mat2c D = cplx(-1) * adjoint(L);
  Mat4c m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = L(i, j);
      m(i + 2, j + 2) = D(i, j);
    }
  cplx ia(0, alpha);
  for (int i = 0; i < 4; ++i) m(i, i) += ia;
  return m;
}

namespace {

// Spinor connection contracted along the tangent, with the dilaton part dropped
// (transports assume G = 0).
Mat2c contract_spinor_connection(const Background& bg, const Vec4d& x, const Vec4d& xdot) {
  auto gam = bg.h_connection.coeffs(x);
  Vec4d y = bg.em_potential.coeffs ? bg.em_potential.coeffs(x) : Vec4d{};
  Mat2c r;
  for (int a = 0; a < 4; ++a) {
    if (xdot[a] == 0.0) continue;
    r = r + xdot[a] * (cplx(0, y[a]) * Mat2c::identity() + half_trace_endh(gam[a]));
  }
  return r;
}

}  // namespace

Mat2c spinor_fermi_generator(const Worldline& line, double s, const Background& bg, double alpha) {
  FermiData fd = fermi_data(line, s, bg);
  Mat2c lam = contract_spinor_connection(bg, line.position(s), line.velocity(s));
  return spinor_fermi_coefficients(fd, lam, alpha);
}

Mat4c four_spinor_fermi_generator(const Worldline& line, double s, const Background& bg,
                                  double alpha) {
  FermiData fd = fermi_data(line, s, bg);
  Mat2c lam = contract_spinor_connection(bg, line.position(s), line.velocity(s));
  return four_spinor_fermi_coefficients(fd, lam, alpha);
}

Mat4d congruence_extension(const Mat4d& phi_flat_tau, const MinkVector& tau, const MinkVector& v) {
  return minkowski_dot(v.pauli(), tau.pauli()) * phi_flat_tau;
}

TransportState vector_state(const Vec4d& comps, double s) {
  TransportState st;
  st.kind = TransportKind::vector_h;
  for (int i = 0; i < 4; ++i) st.components[i] = comps[i];
  st.s = s;
  return st;
}

TransportState two_spinor_state(const Vec2c& comps, double s) {
  TransportState st;
  st.kind = TransportKind::two_spinor;
  st.components[0] = comps[0];
  st.components[1] = comps[1];
  st.s = s;
  return st;
}

TransportState four_spinor_state(const DiracSpinor& psi, double s) {
  TransportState st;
  st.kind = TransportKind::four_spinor;
  st.components = psi.w;
  st.s = s;
  return st;
}

Vec4d vector_components(const TransportState& st) {
  return {st.components[0].real(), st.components[1].real(), st.components[2].real(),
          st.components[3].real()};
}

std::vector<TransportState> transport(const Worldline& line, const Background& bg,
                                      const TransportState& initial,
                                      const TransportOptions& opts) {
  if (!line.proper_time)
    throw std::invalid_argument("transport: worldline must be proper-time parameterized");

  auto alpha_at = [&](double s) { return opts.alpha ? opts.alpha(s) : 0.0; };

  // Generator as a complex 4x4 regardless of kind; unused rows/columns stay zero.
  auto generator = [&, kind = initial.kind](double s) -> Mat4c {
    switch (kind) {
      case TransportKind::vector_h:
        return complexify(vector_transport_generator(line, s, bg));
      case TransportKind::two_spinor: {
        Mat2c m = spinor_fermi_generator(line, s, bg, alpha_at(s));
        Mat4c r;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) r(i, j) = m(i, j);
        return r;
      }
      case TransportKind::four_spinor:
        return four_spinor_fermi_generator(line, s, bg, alpha_at(s));
    }
    return Mat4c::zero();
  };
  return transport_with_generator(generator, initial, opts);
}

std::vector<TransportState> transport_with_generator(const std::function<Mat4c(double)>& generator,
                                                     const TransportState& initial,
                                                     const TransportOptions& opts) {
  if (opts.step <= 0) throw std::invalid_argument("transport: step must be positive");

  double span = opts.s1 - opts.s0;
  std::vector<TransportState> out;
  Vec4c y = initial.components;
  double s = opts.s0;
  out.push_back({initial.kind, y, s});
  if (span == 0.0) return out;

  long nsteps = std::lround(std::ceil(std::abs(span) / opts.step - 1e-12));
  if (nsteps < 1) nsteps = 1;
  double h = span / nsteps;
  out.reserve(static_cast<size_t>(nsteps / std::max(1, opts.store_every)) + 2);

  for (long step = 0; step < nsteps; ++step) {
    Mat4c m1 = generator(s);
    Mat4c m2 = generator(s + 0.5 * h);
    Mat4c m3 = m2;
    Mat4c m4 = generator(s + h);

    Vec4c k1 = m1 * y;
    Vec4c k2 = m2 * (y + (0.5 * h) * k1);
    Vec4c k3 = m3 * (y + (0.5 * h) * k2);
    Vec4c k4 = m4 * (y + h * k3);
    y = y + (h / 6.0) * (k1 + cplx(2) * k2 + cplx(2) * k3 + k4);
    s = opts.s0 + (step + 1) * h;

    if ((step + 1) % std::max(1, opts.store_every) == 0 || step + 1 == nsteps)
      out.push_back({initial.kind, y, s});
  }
  return out;
}

std::function<Mat4c(double)> interpolated_generator(std::vector<double> nodes,
                                                    std::vector<Mat4c> values) {
  if (nodes.size() != values.size() || nodes.size() < 4)
    throw std::invalid_argument("interpolated_generator: need at least 4 samples");
  return [nodes = std::move(nodes), values = std::move(values)](double s) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), s);
    long i = std::clamp<long>(it - nodes.begin() - 1, 1, static_cast<long>(nodes.size()) - 3);
    double t = (s - nodes[i]) / (nodes[i + 1] - nodes[i]);
    // Catmull-Rom weights on the four surrounding samples.
    double w0 = 0.5 * (-t + 2 * t * t - t * t * t);
    double w1 = 0.5 * (2 - 5 * t * t + 3 * t * t * t);
    double w2 = 0.5 * (t + 4 * t * t - 3 * t * t * t);
    double w3 = 0.5 * (-t * t + t * t * t);
    Mat4c r;
    for (int k = 0; k < 16; ++k)
      r.a[k] = w0 * values[i - 1].a[k] + w1 * values[i].a[k] + w2 * values[i + 1].a[k] +
               w3 * values[i + 2].a[k];
    return r;
  };
}

}  // namespace spinors
