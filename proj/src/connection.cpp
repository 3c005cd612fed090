#include "spinors/connection.hpp"

#include <cmath>
#include <stdexcept>

namespace spinors {

namespace {

void validate_h_connection(const Mat4d& g) {
  double scale = std::max(max_abs(g), 1e-30);
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) {
      // Lowered components: G_{lm} = eta_{ll} G^l_m.
      double glm = eta(l, l) * g(l, m);
      double gml = eta(m, m) * g(m, l);
      if (std::abs(glm + gml) > 1e-9 * scale)
        throw std::invalid_argument("h-connection coefficients are not lowered-antisymmetric");
    }
}

}  // namespace

InducedScalars induced_scalars(const std::array<Mat2c, 4>& lambda) {
  InducedScalars r;
  for (int a = 0; a < 4; ++a) {
    cplx t = trace(lambda[a]);
    r.G[a] = 0.5 * t.real();
    r.Y[a] = 0.5 * t.imag();
  }
  return r;
}

Mat4d induced_endh(const Mat2c& L) {
  // Frame components (1/2)[tr(sigma_l L sigma_m) + tr(sigma_l sigma_m L^dag)].
  Mat4d r;
  Mat2c Ld = adjoint(L);
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) {
      cplx v = 0.5 * (trace(pauli_sigma(l) * L * pauli_sigma(m)) +
                      trace(pauli_sigma(l) * pauli_sigma(m) * Ld));
      r(l, m) = v.real();
    }
  return r;
}

std::array<Mat4d, 4> induced_h_connection(const std::array<Mat2c, 4>& lambda) {
  InducedScalars gy = induced_scalars(lambda);
  std::array<Mat4d, 4> r;
  for (int a = 0; a < 4; ++a) {
    r[a] = induced_endh(lambda[a]) - 2.0 * gy.G[a] * Mat4d::identity();
  }
  return r;
}

Mat2c half_trace_endh(const Mat4d& mixed) {
  Mat2c r;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) {
      if (mixed(l, m) == 0.0) continue;
      r = r + (0.25 * mixed(l, m)) * (pauli_sigma(l) * pauli_sigma(m));
    }
  return r;
}

Mat2c reconstruct_spinor_direction(double G, double Y, const Mat4d& h_conn) {
  validate_h_connection(h_conn);
  return cplx(G, Y) * Mat2c::identity() + half_trace_endh(h_conn);
}

std::array<Mat2c, 4> reconstruct_spinor(const InducedScalars& gy,
                                        const std::array<Mat4d, 4>& h_conn) {
  std::array<Mat2c, 4> r;
  for (int a = 0; a < 4; ++a) r[a] = reconstruct_spinor_direction(gy.G[a], gy.Y[a], h_conn[a]);
  return r;
}

std::array<EndW, 4> four_spinor_connection(const Vec4d& Y, const std::array<Mat4d, 4>& h_conn) {
  std::array<EndW, 4> r;
  for (int a = 0; a < 4; ++a) {
    Mat2c L = reconstruct_spinor_direction(0.0, Y[a], h_conn[a]);
    Mat4c m;
    Mat2c D = cplx(-1) * adjoint(L);  // dual-conjugate block
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m(i, j) = L(i, j);
        m(i + 2, j + 2) = D(i, j);
      }
    r[a] = EndW{m, SpinBasis::weyl};
  }
  return r;
}

std::array<Mat4d, 4> spacetime_connection(const Mat4d& theta, const std::array<Mat4d, 4>& h_conn,
                                          const Vec4d& G) {
  if (std::abs(det(theta)) < 1e-12)
    throw std::invalid_argument("spacetime_connection: degenerate tetrad");
  std::array<Mat4d, 4> r;
  for (int a = 0; a < 4; ++a) r[a] = h_conn[a] + 2.0 * G[a] * Mat4d::identity();
  return r;
}

TorsionValue torsion(const TetradField& tetrad, const HConnectionField& h_conn,
                     const CovectorField& G, const Vec4d& x, double h) {
  Mat4d th = tetrad.theta(x);
  if (std::abs(det(th)) < 1e-12) throw std::invalid_argument("torsion: degenerate tetrad");
  Mat4d th_inv = inverse(th);

  std::array<Mat4d, 4> dth;
  if (tetrad.dtheta) {
    dth = tetrad.dtheta(x);
  } else {
    for (int a = 0; a < 4; ++a) dth[a] = fd_partial<Mat4d>(tetrad.theta, x, a, h);
  }
  std::array<Mat4d, 4> gam = h_conn.coeffs(x);
  Vec4d g = G.coeffs ? G.coeffs(x) : Vec4d{};

  TorsionValue t;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      // D^lam_ab: antisymmetrized structure function plus connection and G terms.
      Vec4d D{};
      for (int l = 0; l < 4; ++l) {
        double v = 0.5 * (dth[a](l, b) - dth[b](l, a));
        for (int m = 0; m < 4; ++m) v += 0.5 * (th(m, a) * gam[b](l, m) - th(m, b) * gam[a](l, m));
        v += th(l, a) * g[b] - th(l, b) * g[a];
        D[l] = v;
      }
      for (int c = 0; c < 4; ++c) {
        double v = 0;
        for (int l = 0; l < 4; ++l) v += th_inv(c, l) * D[l];
        t.comps[c](a, b) = v;
        t.comps[c](b, a) = -v;
      }
    }
  return t;
}

ConnectionGrid2D ConnectionGrid2D::sample(const SpinorConnectionField& field, const Vec4d& center,
                                          int dir_a, int dir_b, double h, int na, int nb) {
  ConnectionGrid2D g;
  g.origin = center;
  g.dir_a = dir_a;
  g.dir_b = dir_b;
  g.h = h;
  g.na = na;
  g.nb = nb;
  g.samples.resize(static_cast<size_t>(na) * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      Vec4d x = center;
      x[dir_a] += (i - (na - 1) / 2) * h;
      x[dir_b] += (j - (nb - 1) / 2) * h;
      g.samples[static_cast<size_t>(i) * nb + j] = field.coeffs(x);
    }
  return g;
}

Mat2c curvature_component(const ConnectionGrid2D& grid, int i, int j, int stride) {
  if (i - stride < 0 || i + stride >= grid.na || j - stride < 0 || j + stride >= grid.nb)
    throw std::invalid_argument("curvature_component: grid too small for centered stencils");
  double den = 2.0 * stride * grid.h;
  const auto& c = grid.at(i, j);
  Mat2c dLb = (cplx(1) / den) * (grid.at(i + stride, j)[grid.dir_b] -
                                 grid.at(i - stride, j)[grid.dir_b]);
  Mat2c dLa = (cplx(1) / den) * (grid.at(i, j + stride)[grid.dir_a] -
                                 grid.at(i, j - stride)[grid.dir_a]);
  return dLb - dLa - commutator(c[grid.dir_a], c[grid.dir_b]);
}

double curvature_relation_check(const ConnectionGrid2D& grid) {
  if (grid.na < 5 || grid.nb < 5)
    throw std::invalid_argument("curvature_relation_check: grid too small for centered stencils");
  int ic = (grid.na - 1) / 2, jc = (grid.nb - 1) / 2;
  if (ic < 2 || jc < 2 || ic + 2 >= grid.na || jc + 2 >= grid.nb)
    throw std::invalid_argument("curvature_relation_check: center node too close to boundary");

  // Left side: curvature of the spinor connection, stencils at h.
  Mat2c lhs = curvature_component(grid, ic, jc, 1);

  // Right side: trace part from the induced scalars plus the half trace of the induced
  // curvature on H, stencils at 2h.
  auto induced_at = [&](int i, int j) {
    const auto& lam = grid.at(i, j);
    struct {
      InducedScalars gy;
      std::array<Mat4d, 4> gam;
    } r{induced_scalars(lam), induced_h_connection(lam)};
    return r;
  };
  auto c0 = induced_at(ic, jc);
  auto ap = induced_at(ic + 2, jc), am = induced_at(ic - 2, jc);
  auto bp = induced_at(ic, jc + 2), bm = induced_at(ic, jc - 2);
  double den = 4.0 * grid.h;
  int a = grid.dir_a, b = grid.dir_b;

  cplx trace_part = (ap.gy.G[b] - am.gy.G[b] - (bp.gy.G[a] - bm.gy.G[a])) / den +
                    cplx(0, 1) * ((ap.gy.Y[b] - am.gy.Y[b] - (bp.gy.Y[a] - bm.gy.Y[a])) / den);
  Mat4d dGb = (1.0 / den) * (ap.gam[b] - am.gam[b]);
  Mat4d dGa = (1.0 / den) * (bp.gam[a] - bm.gam[a]);
  Mat4d comm = c0.gam[a] * c0.gam[b] - c0.gam[b] * c0.gam[a];
  Mat4d r_tilde = dGb - dGa - comm;

  Mat2c rhs = trace_part * Mat2c::identity() + half_trace_endh(r_tilde);
  return max_abs_diff(lhs, rhs);
}

ConnectionDifference connection_difference_decompose(const std::array<Mat2c, 4>& lambda,
                                                     const std::array<Mat2c, 4>& lambda_prime) {
  ConnectionDifference d;
  for (int a = 0; a < 4; ++a) {
    Mat2c th = lambda[a] - lambda_prime[a];
    cplx t = trace(th);
    d.real_trace[a] = 0.5 * t.real();
    d.alpha[a] = 0.5 * t.imag();
    d.phi[a] = th - (0.5 * t) * Mat2c::identity();
  }
  return d;
}

}  // namespace spinors
