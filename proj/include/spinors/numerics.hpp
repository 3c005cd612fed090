// Small fixed-size real/complex linear algebra kernels used throughout the library.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace spinors {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

using Vec2c = std::array<cplx, 2>;
using Vec4c = std::array<cplx, 4>;
using Vec4d = std::array<double, 4>;

// Minkowski signature (+,-,-,-) on frame indices.
inline double eta(int lam, int mu) { return lam != mu ? 0.0 : (lam == 0 ? 1.0 : -1.0); }

inline double minkowski_dot(const Vec4d& x, const Vec4d& y) {
  return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

// 2x2 complex matrix, row major.
struct Mat2c {
  std::array<cplx, 4> a{};

  cplx& operator()(int r, int c) { return a[2 * r + c]; }
  const cplx& operator()(int r, int c) const { return a[2 * r + c]; }

  static Mat2c zero() { return {}; }
  static Mat2c identity() { return Mat2c{{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
};

Mat2c operator+(const Mat2c& x, const Mat2c& y);
Mat2c operator-(const Mat2c& x, const Mat2c& y);
Mat2c operator*(const Mat2c& x, const Mat2c& y);
Mat2c operator*(cplx s, const Mat2c& x);
Vec2c operator*(const Mat2c& x, const Vec2c& v);

Mat2c adjoint(const Mat2c& x);    // conjugate transpose
Mat2c transpose(const Mat2c& x);
Mat2c conjugate(const Mat2c& x);
cplx trace(const Mat2c& x);
cplx det(const Mat2c& x);
Mat2c inverse(const Mat2c& x);
Mat2c commutator(const Mat2c& x, const Mat2c& y);
double max_abs(const Mat2c& x);
double max_abs_diff(const Mat2c& x, const Mat2c& y);

// exp(A) for traceless 2x2 A via Cayley-Hamilton: A^2 = -det(A) 1.
Mat2c exp_traceless(const Mat2c& x);

// 4x4 complex matrix, row major.
struct Mat4c {
  std::array<cplx, 16> a{};

  cplx& operator()(int r, int c) { return a[4 * r + c]; }
  const cplx& operator()(int r, int c) const { return a[4 * r + c]; }

  static Mat4c zero() { return {}; }
  static Mat4c identity();
};

Mat4c operator+(const Mat4c& x, const Mat4c& y);
Mat4c operator-(const Mat4c& x, const Mat4c& y);
Mat4c operator*(const Mat4c& x, const Mat4c& y);
Mat4c operator*(cplx s, const Mat4c& x);
Vec4c operator*(const Mat4c& x, const Vec4c& v);

Mat4c adjoint(const Mat4c& x);
cplx trace(const Mat4c& x);
double max_abs(const Mat4c& x);
double max_abs_diff(const Mat4c& x, const Mat4c& y);

// 4x4 real matrix, row major.
struct Mat4d {
  std::array<double, 16> a{};

  double& operator()(int r, int c) { return a[4 * r + c]; }
  const double& operator()(int r, int c) const { return a[4 * r + c]; }

  static Mat4d zero() { return {}; }
  static Mat4d identity();
};

Mat4d operator+(const Mat4d& x, const Mat4d& y);
Mat4d operator-(const Mat4d& x, const Mat4d& y);
Mat4d operator*(const Mat4d& x, const Mat4d& y);
Mat4d operator*(double s, const Mat4d& x);
Vec4d operator*(const Mat4d& x, const Vec4d& v);

Mat4d transpose(const Mat4d& x);
double det(const Mat4d& x);
// Gauss-Jordan with partial pivoting; throws std::domain_error on a singular input.
Mat4d inverse(const Mat4d& x);
double max_abs(const Mat4d& x);
double max_abs_diff(const Mat4d& x, const Mat4d& y);
Mat4c complexify(const Mat4d& x);

// Eigenvalues of a Hermitian 4x4 matrix by cyclic complex Jacobi sweeps, ascending order.
std::array<double, 4> hermitian_eigenvalues(const Mat4c& x);
std::array<double, 4> symmetric_eigenvalues(const Mat4d& x);

// Vector helpers.
double max_abs(const Vec4d& v);
double max_abs(const Vec4c& v);
double max_abs(const Vec2c& v);
double max_abs_diff(const Vec4d& x, const Vec4d& y);
double max_abs_diff(const Vec4c& x, const Vec4c& y);
double max_abs_diff(const Vec2c& x, const Vec2c& y);

Vec4d operator+(const Vec4d& x, const Vec4d& y);
Vec4d operator-(const Vec4d& x, const Vec4d& y);
Vec4d operator*(double s, const Vec4d& x);

Vec4c operator+(const Vec4c& x, const Vec4c& y);
Vec4c operator-(const Vec4c& x, const Vec4c& y);
Vec4c operator*(cplx s, const Vec4c& x);

Vec2c operator+(const Vec2c& x, const Vec2c& y);
Vec2c operator-(const Vec2c& x, const Vec2c& y);
Vec2c operator*(cplx s, const Vec2c& x);

}  // namespace spinors
