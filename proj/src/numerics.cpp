// Implementation of the fixed-size matrix kernels.
#include "spinors/numerics.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinors {

// ---------------------------------------------------------------------------
// Mat2c

Mat2c operator+(const Mat2c& x, const Mat2c& y) {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat2c operator-(const Mat2c& x, const Mat2c& y) {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat2c operator*(const Mat2c& x, const Mat2c& y) {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

Mat2c operator*(cplx s, const Mat2c& x) {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.a[i] = s * x.a[i];
  return r;
}

Vec2c operator*(const Mat2c& x, const Vec2c& v) {
  return {x(0, 0) * v[0] + x(0, 1) * v[1], x(1, 0) * v[0] + x(1, 1) * v[1]};
}

Mat2c adjoint(const Mat2c& x) {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

Mat2c transpose(const Mat2c& x) {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = x(j, i);
  return r;
}

Mat2c conjugate(const Mat2c& x) {
  Mat2c r;
  for (int i = 0; i < 4; ++i) r.a[i] = std::conj(x.a[i]);
  return r;
}

cplx trace(const Mat2c& x) { return x(0, 0) + x(1, 1); }

cplx det(const Mat2c& x) { return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0); }

Mat2c inverse(const Mat2c& x) {
  cplx d = det(x);
  if (std::abs(d) < 1e-300) throw std::domain_error("Mat2c::inverse: singular matrix");
  cplx s = cplx(1) / d;
  return Mat2c{{s * x(1, 1), -s * x(0, 1), -s * x(1, 0), s * x(0, 0)}};
}

Mat2c commutator(const Mat2c& x, const Mat2c& y) { return x * y - y * x; }

double max_abs(const Mat2c& x) {
  double m = 0;
  for (const auto& v : x.a) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Mat2c& x, const Mat2c& y) { return max_abs(x - y); }

Mat2c exp_traceless(const Mat2c& x) {
  // A^2 = -det(A) 1 for traceless A, so exp(A) = cosh(mu) 1 + sinhc(mu) A, mu^2 = -det(A).
  cplx mu2 = -det(x);
  cplx mu = std::sqrt(mu2);
  cplx ch, shc;
  if (std::abs(mu) < 1e-6) {
    ch = cplx(1) + mu2 / 2.0 + mu2 * mu2 / 24.0;
    shc = cplx(1) + mu2 / 6.0 + mu2 * mu2 / 120.0;
  } else {
    ch = std::cosh(mu);
    shc = std::sinh(mu) / mu;
  }
  Mat2c r = shc * x;
  r(0, 0) += ch;
  r(1, 1) += ch;
  return r;
}

// ---------------------------------------------------------------------------
// Mat4c

Mat4c Mat4c::identity() {
  Mat4c r;
  for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
  return r;
}

Mat4c operator+(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat4c operator-(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat4c operator*(const Mat4c& x, const Mat4c& y) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      cplx xik = x(i, k);
      if (xik == cplx(0)) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

Mat4c operator*(cplx s, const Mat4c& x) {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
  return r;
}

Vec4c operator*(const Mat4c& x, const Vec4c& v) {
  Vec4c r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += x(i, j) * v[j];
  return r;
}

Mat4c adjoint(const Mat4c& x) {
  Mat4c r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

cplx trace(const Mat4c& x) { return x(0, 0) + x(1, 1) + x(2, 2) + x(3, 3); }

double max_abs(const Mat4c& x) {
  double m = 0;
  for (const auto& v : x.a) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Mat4c& x, const Mat4c& y) { return max_abs(x - y); }

// ---------------------------------------------------------------------------
// Mat4d

Mat4d Mat4d::identity() {
  Mat4d r;
  for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
  return r;
}

Mat4d operator+(const Mat4d& x, const Mat4d& y) {
  Mat4d r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat4d operator-(const Mat4d& x, const Mat4d& y) {
  Mat4d r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat4d operator*(const Mat4d& x, const Mat4d& y) {
  Mat4d r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double xik = x(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

Mat4d operator*(double s, const Mat4d& x) {
  Mat4d r;
  for (int i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
  return r;
}

Vec4d operator*(const Mat4d& x, const Vec4d& v) {
  Vec4d r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += x(i, j) * v[j];
  return r;
}

Mat4d transpose(const Mat4d& x) {
  Mat4d r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = x(j, i);
  return r;
}

namespace {

// LU with partial pivoting on an augmented [A | B] system, in place.
void gauss_jordan(std::array<double, 32>& m) {
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[8 * r + col]) > std::abs(m[8 * piv + col])) piv = r;
    if (std::abs(m[8 * piv + col]) < 1e-300)
      throw std::domain_error("Mat4d::inverse: singular matrix");
    if (piv != col)
      for (int c = 0; c < 8; ++c) std::swap(m[8 * piv + c], m[8 * col + c]);
    double inv = 1.0 / m[8 * col + col];
    for (int c = 0; c < 8; ++c) m[8 * col + c] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      double f = m[8 * r + col];
      if (f == 0.0) continue;
      for (int c = 0; c < 8; ++c) m[8 * r + c] -= f * m[8 * col + c];
    }
  }
}

}  // namespace

double det(const Mat4d& x) {
  // Expansion via LU; small enough to do directly.
  std::array<double, 16> m = x.a;
  double d = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[4 * r + col]) > std::abs(m[4 * piv + col])) piv = r;
    if (std::abs(m[4 * piv + col]) < 1e-300) return 0.0;
    if (piv != col) {
      for (int c = 0; c < 4; ++c) std::swap(m[4 * piv + c], m[4 * col + c]);
      d = -d;
    }
    d *= m[4 * col + col];
    for (int r = col + 1; r < 4; ++r) {
      double f = m[4 * r + col] / m[4 * col + col];
      for (int c = col; c < 4; ++c) m[4 * r + c] -= f * m[4 * col + c];
    }
  }
  return d;
}

Mat4d inverse(const Mat4d& x) {
  std::array<double, 32> m{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[8 * r + c] = x(r, c);
    m[8 * r + 4 + r] = 1.0;
  }
  gauss_jordan(m);
  Mat4d r;
  for (int i = 0; i < 4; ++i)
    for (int c = 0; c < 4; ++c) r(i, c) = m[8 * i + 4 + c];
  return r;
}

double max_abs(const Mat4d& x) {
  double m = 0;
  for (double v : x.a) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Mat4d& x, const Mat4d& y) { return max_abs(x - y); }

Mat4c complexify(const Mat4d& x) {
  Mat4c r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i];
  return r;
}

// ---------------------------------------------------------------------------
// Hermitian eigenvalues (cyclic Jacobi)

std::array<double, 4> hermitian_eigenvalues(const Mat4c& input) {
  Mat4c m = input;
  double scale = max_abs(m);
  if (scale == 0.0) return {0, 0, 0, 0};

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off = std::max(off, std::abs(m(p, q)));
    if (off < 1e-15 * scale) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        double b = std::abs(m(p, q));
        if (b < 1e-30 * scale) continue;
        cplx w = m(p, q) / b;  // phase of the off-diagonal entry
        double app = m(p, p).real();
        double aqq = m(q, q).real();
        double tau = (aqq - app) / (2 * b);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        double c = 1.0 / std::sqrt(1 + t * t);
        double s = t * c;
        // Unitary 2x2 block U = [[c, s*w], [-s*conj(w), c]]; apply m <- U^dag m U.
        for (int k = 0; k < 4; ++k) {  // columns: m <- m U
          cplx mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * std::conj(w) * mkq;
          m(k, q) = s * w * mkp + c * mkq;
        }
        for (int k = 0; k < 4; ++k) {  // rows: m <- U^dag m
          cplx mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * w * mqk;
          m(q, k) = s * std::conj(w) * mpk + c * mqk;
        }
      }
    }
  }

  std::array<double, 4> ev{m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real()};
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::array<double, 4> symmetric_eigenvalues(const Mat4d& x) {
  return hermitian_eigenvalues(complexify(x));
}

// ---------------------------------------------------------------------------
// Vector helpers

double max_abs(const Vec4d& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs(const Vec4c& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs(const Vec2c& v) { return std::max(std::abs(v[0]), std::abs(v[1])); }

double max_abs_diff(const Vec4d& x, const Vec4d& y) { return max_abs(x - y); }
double max_abs_diff(const Vec4c& x, const Vec4c& y) { return max_abs(x - y); }
double max_abs_diff(const Vec2c& x, const Vec2c& y) { return max_abs(x - y); }

Vec4d operator+(const Vec4d& x, const Vec4d& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}
Vec4d operator-(const Vec4d& x, const Vec4d& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}
Vec4d operator*(double s, const Vec4d& x) { return {s * x[0], s * x[1], s * x[2], s * x[3]}; }

Vec4c operator+(const Vec4c& x, const Vec4c& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}
Vec4c operator-(const Vec4c& x, const Vec4c& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}
Vec4c operator*(cplx s, const Vec4c& x) { return {s * x[0], s * x[1], s * x[2], s * x[3]}; }

Vec2c operator+(const Vec2c& x, const Vec2c& y) { return {x[0] + y[0], x[1] + y[1]}; }
Vec2c operator-(const Vec2c& x, const Vec2c& y) { return {x[0] - y[0], x[1] - y[1]}; }
Vec2c operator*(cplx s, const Vec2c& x) { return {s * x[0], s * x[1]}; }

}  // namespace spinors
