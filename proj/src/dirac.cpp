#include "spinors/dirac.hpp"

#include <cmath>
#include <stdexcept>

namespace spinors {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

const Mat2c kRicci{{cplx(0), cplx(1), cplx(-1), cplx(0)}};

void require_same_basis(const EndW& x, const EndW& y) {
  if (x.basis != y.basis)
    throw std::logic_error("EndW: operands carry different basis tags");
}

// Assemble a Weyl-basis operator from blocks acting on the (u, chi) pair. The Weyl
// components carry a minus sign on the chi slots, which flips the off-diagonal blocks.
Mat4c weyl_from_pair_blocks(const Mat2c& A, const Mat2c& B, const Mat2c& C, const Mat2c& D) {
  Mat4c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      r(i, j) = A(i, j);
      r(i, j + 2) = -B(i, j);
      r(i + 2, j) = -C(i, j);
      r(i + 2, j + 2) = D(i, j);
    }
  return r;
}

}  // namespace

DiracSpinor operator+(const DiracSpinor& x, const DiracSpinor& y) {
  return DiracSpinor{x.w + y.w};
}
DiracSpinor operator-(const DiracSpinor& x, const DiracSpinor& y) {
  return DiracSpinor{x.w - y.w};
}
DiracSpinor operator*(cplx s, const DiracSpinor& x) { return DiracSpinor{s * x.w}; }

EndW operator+(const EndW& x, const EndW& y) {
  require_same_basis(x, y);
  return {x.m + y.m, x.basis};
}

EndW operator-(const EndW& x, const EndW& y) {
  require_same_basis(x, y);
  return {x.m - y.m, x.basis};
}

EndW operator*(const EndW& x, const EndW& y) {
  require_same_basis(x, y);
  return {x.m * y.m, x.basis};
}

EndW operator*(cplx s, const EndW& x) { return {s * x.m, x.basis}; }

DiracSpinor apply(const EndW& op, const DiracSpinor& psi) {
  if (op.basis == SpinBasis::weyl) return DiracSpinor{op.m * psi.w};
  Vec4c d = basis_change(psi.w, SpinBasis::weyl, SpinBasis::dirac);
  return DiracSpinor{basis_change(op.m * d, SpinBasis::dirac, SpinBasis::weyl)};
}

EndW identity_w() { return {Mat4c::identity(), SpinBasis::weyl}; }

const Mat4d& weyl_to_dirac_matrix() {
  // Columns are the Dirac basis vectors expressed in the Weyl basis.
  static const Mat4d C = [] {
    const double s = 1.0 / kSqrt2;
    Mat4d c;
    c(0, 0) = s;  c(0, 2) = s;
    c(1, 1) = s;  c(1, 3) = s;
    c(2, 0) = -s; c(2, 2) = s;
    c(3, 1) = -s; c(3, 3) = s;
    return c;
  }();
  return C;
}

Vec4c basis_change(const Vec4c& comps, SpinBasis from, SpinBasis to) {
  if (from == to) return comps;
  const Mat4d& C = weyl_to_dirac_matrix();
  Vec4c r{};
  if (to == SpinBasis::dirac) {  // coords_D = C^T coords_W
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i] += C(j, i) * comps[j];
  } else {  // coords_W = C coords_D
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i] += C(i, j) * comps[j];
  }
  return r;
}

EndW basis_change(const EndW& op, SpinBasis to) {
  if (op.basis == to) return op;
  const Mat4c C = complexify(weyl_to_dirac_matrix());
  const Mat4c Ct = adjoint(C);  // real orthogonal, so adjoint = transpose = inverse
  if (to == SpinBasis::dirac) return {Ct * op.m * C, SpinBasis::dirac};
  return {C * op.m * Ct, SpinBasis::weyl};
}

EndW gamma(const ComplexTensorUU& y) {
  // Block action on the pair (u, chi): u' = sqrt2 y chi, chi' = sqrt2 (y-flat)^T u,
  // with y-flat = E^T y E the double eps-lowering.
  Mat2c S = kSqrt2 * y.m;
  Mat2c Sbar = kSqrt2 * (transpose(kRicci) * transpose(y.m) * kRicci);
  return {weyl_from_pair_blocks(Mat2c::zero(), S, Sbar, Mat2c::zero()), SpinBasis::weyl};
}

EndW gamma(const MinkVector& y) { return gamma(y.tensor()); }

EndW gamma_pauli(int lam) {
  static const std::array<EndW, 4> g = [] {
    std::array<EndW, 4> r;
    auto tau = pauli_basis();
    for (int i = 0; i < 4; ++i) r[i] = gamma(tau[i]);
    return r;
  }();
  return g[lam];
}

EndW clifford_defect(const ComplexTensorUU& y, const ComplexTensorUU& y2) {
  EndW gy = gamma(y), gy2 = gamma(y2);
  return gy * gy2 + gy2 * gy - g_bilinear(y, y2) * (cplx(2) * identity_w());
}

cplx k_product(const DiracSpinor& psi, const DiracSpinor& phi) {
  Vec2c up = psi.u(), cp = psi.chi();
  Vec2c uf = phi.u(), cf = phi.chi();
  cplx s = 0;
  for (int a = 0; a < 2; ++a) s += std::conj(cp[a]) * uf[a] + cf[a] * std::conj(up[a]);
  return s;
}

Vec4c dirac_adjoint(const DiracSpinor& psi) {
  // Components a_alpha with k(psi, phi) = a_alpha phi^alpha in the Weyl basis.
  Vec2c u = psi.u(), c = psi.chi();
  return {std::conj(c[0]), std::conj(c[1]), -std::conj(u[0]), -std::conj(u[1])};
}

EndW gamma_eta() {
  static const EndW ge = gamma_pauli(0) * gamma_pauli(1) * gamma_pauli(2) * gamma_pauli(3);
  return ge;
}

DiracSpinor charge_conjugation(const DiracSpinor& psi, double t, const SymplecticForm& eps) {
  Vec2c u = psi.u(), c = psi.chi();
  CoSpinor chi_bar{{std::conj(c[0]), std::conj(c[1])}};
  TwoSpinor u_new = eps_sharp(chi_bar, eps);
  CoSpinor u_flat = eps_flat(TwoSpinor{u}, eps);
  Vec2c chi_new{-std::conj(u_flat.c[0]), -std::conj(u_flat.c[1])};
  cplx ph = std::exp(cplx(0, -t));
  return ph * DiracSpinor::from_parts(u_new.c, chi_new);
}

EndW parity() { return gamma_pauli(0); }

DiracSpinor time_reversal(const DiracSpinor& psi, double t, const SymplecticForm& eps) {
  return apply(gamma_eta(), apply(gamma_pauli(0), charge_conjugation(psi, t, eps)));
}

cplx observer_h(const DiracSpinor& psi, const DiracSpinor& phi) {
  return k_product(apply(gamma_pauli(0), psi), phi);
}

cplx observer_h(const DiracSpinor& psi, const DiracSpinor& phi, const MinkVector& tau_obs) {
  return k_product(apply(gamma(tau_obs), psi), phi);
}

Bivector Bivector::from_components(const Mat4d& comps) {
  double scale = std::max(max_abs(comps), 1e-30);
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      if (std::abs(comps(l, m) + comps(m, l)) > 1e-12 * scale)
        throw std::invalid_argument("Bivector: components are not antisymmetric");
  return Bivector{comps};
}

Bivector Bivector::wedge(const Vec4d& x, const Vec4d& y) {
  Mat4d r;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) r(l, m) = 0.5 * (x[l] * y[m] - x[m] * y[l]);
  return Bivector{r};
}

Mat4d lower_second_index(const Mat4d& raised) {
  Mat4d r;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) r(l, m) = raised(l, m) * eta(m, m);
  return r;
}

Mat4d raise_second_index(const Mat4d& mixed) {
  Mat4d r;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) r(l, m) = mixed(l, m) * eta(m, m);
  return r;
}

EndW hat_gamma(const Bivector& phi) {
  EndW r{Mat4c::zero(), SpinBasis::weyl};
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) {
      if (phi.comps(l, m) == 0.0) continue;
      r = r + cplx(phi.comps(l, m)) * (gamma_pauli(l) * gamma_pauli(m));
    }
  return r;
}

}  // namespace spinors
