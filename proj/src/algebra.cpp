#include "spinors/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spinors {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Ricci matrix, eps_{12} = eps^{12} = +1.
const Mat2c kRicci{{cplx(0), cplx(1), cplx(-1), cplx(0)}};

}  // namespace

SymplecticForm::SymplecticForm(cplx phase) : phase_(phase) {
  double n = std::abs(phase);
  if (std::abs(n - 1.0) > 1e-12)
    throw std::invalid_argument("SymplecticForm: phase must be a unit complex number");
}

Mat2c SymplecticForm::matrix() const { return phase_ * kRicci; }

Mat2c SymplecticForm::inverse_matrix() const { return std::conj(phase_) * kRicci; }

cplx SymplecticForm::apply(const TwoSpinor& u, const TwoSpinor& v) const {
  Mat2c e = matrix();
  cplx s = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s += e(a, b) * u.c[a] * v.c[b];
  return s;
}

cplx SymplecticForm::apply_inverse(const CoSpinor& l, const CoSpinor& m) const {
  Mat2c e = inverse_matrix();
  cplx s = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s += e(a, b) * l.c[a] * m.c[b];
  return s;
}

CoSpinor eps_flat(const TwoSpinor& u, const SymplecticForm& eps) {
  Mat2c e = eps.matrix();
  CoSpinor r;
  for (int b = 0; b < 2; ++b) r.c[b] = e(0, b) * u.c[0] + e(1, b) * u.c[1];
  return r;
}

TwoSpinor eps_sharp(const CoSpinor& l, const SymplecticForm& eps) {
  Mat2c e = eps.inverse_matrix();
  TwoSpinor r;
  for (int b = 0; b < 2; ++b) r.c[b] = e(0, b) * l.c[0] + e(1, b) * l.c[1];
  return r;
}

MinkVector MinkVector::from_pauli(const Vec4d& comps) {
  MinkVector w;
  for (int lam = 0; lam < 4; ++lam) w.herm_ = w.herm_ + (comps[lam] / kSqrt2) * pauli_sigma(lam);
  return w;
}

MinkVector MinkVector::from_hermitian(const Mat2c& herm) {
  double scale = std::max(max_abs(herm), 1.0);
  if (max_abs_diff(herm, adjoint(herm)) > 1e-12 * scale)
    throw std::invalid_argument("MinkVector: matrix is not Hermitian");
  MinkVector w;
  // Symmetrize away round-off so pauli() is exactly real.
  w.herm_ = 0.5 * (herm + adjoint(herm));
  return w;
}

Vec4d MinkVector::pauli() const {
  Vec4d r;
  for (int lam = 0; lam < 4; ++lam) r[lam] = (trace(pauli_sigma(lam) * herm_) / kSqrt2).real();
  return r;
}

MinkVector operator+(const MinkVector& x, const MinkVector& y) {
  return MinkVector::from_hermitian(x.herm() + y.herm());
}

MinkVector operator-(const MinkVector& x, const MinkVector& y) {
  return MinkVector::from_hermitian(x.herm() - y.herm());
}

MinkVector operator*(double s, const MinkVector& x) {
  return MinkVector::from_hermitian(s * x.herm());
}

const Mat2c& pauli_sigma(int lam) {
  static const std::array<Mat2c, 4> sigma = {
      Mat2c{{cplx(1), cplx(0), cplx(0), cplx(1)}},
      Mat2c{{cplx(0), cplx(1), cplx(1), cplx(0)}},
      Mat2c{{cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)}},
      Mat2c{{cplx(1), cplx(0), cplx(0), cplx(-1)}},
  };
  return sigma[lam];
}

const Mat2c& pauli_sigma_bar(int lam) {
  static const std::array<Mat2c, 4> sigma_bar = {
      pauli_sigma(0), cplx(-1) * pauli_sigma(1), cplx(-1) * pauli_sigma(2),
      cplx(-1) * pauli_sigma(3)};
  return sigma_bar[lam];
}

std::pair<MinkVector, MinkVector> herm_decompose(const ComplexTensorUU& w) {
  Mat2c h = 0.5 * (w.m + adjoint(w.m));
  Mat2c a = cplx(0, -0.5) * (w.m - adjoint(w.m));
  return {MinkVector::from_hermitian(h), MinkVector::from_hermitian(a)};
}

cplx g_bilinear(const ComplexTensorUU& w, const ComplexTensorUU& w2) {
  // eps (x) eps-bar contraction with the Ricci matrix; the phase cancels.
  const Mat2c& x = w.m;
  const Mat2c& y = w2.m;
  return x(0, 0) * y(1, 1) + x(1, 1) * y(0, 0) - x(0, 1) * y(1, 0) - x(1, 0) * y(0, 1);
}

double g_bilinear(const MinkVector& w, const MinkVector& w2) {
  return g_bilinear(w.tensor(), w2.tensor()).real();
}

std::array<MinkVector, 4> pauli_basis() {
  std::array<MinkVector, 4> tau;
  for (int lam = 0; lam < 4; ++lam) {
    Vec4d c{};
    c[lam] = 1.0;
    tau[lam] = MinkVector::from_pauli(c);
  }
  return tau;
}

MinkVector null_from_spinor(const TwoSpinor& u) {
  Mat2c m;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m(a, b) = u.c[a] * std::conj(u.c[b]);
  return MinkVector::from_hermitian(m);
}

std::optional<NullDecomposition> null_decompose(const MinkVector& w) {
  const Mat2c& m = w.herm();
  double scale = max_abs(m);
  if (scale == 0.0) return std::nullopt;
  if (std::abs(det(m)) > 1e-10 * scale * scale) return std::nullopt;

  double tr = trace(m).real();
  if (tr == 0.0) return std::nullopt;  // null and traceless means zero
  double sign = tr > 0 ? 1.0 : -1.0;
  Mat2c p = sign * m;  // rank-1 positive semidefinite

  // Extract the spinor from the dominant column.
  NullDecomposition r;
  r.sign = sign;
  double p00 = p(0, 0).real(), p11 = p(1, 1).real();
  if (p00 >= p11) {
    double inv = 1.0 / std::sqrt(p00);
    r.u.c = {inv * p(0, 0), inv * p(1, 0)};
  } else {
    double inv = 1.0 / std::sqrt(p11);
    r.u.c = {inv * p(0, 1), inv * p(1, 1)};
  }
  return r;
}

}  // namespace spinors
