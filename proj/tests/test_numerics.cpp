#include "doctest.h"
#include "spinors/numerics.hpp"
#include "test_helpers.hpp"

using namespace spinors;
using namespace spinors::testing;

TEST_CASE("Mat4d inverse and determinant") {
  auto g = rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Mat4d m;
    for (auto& v : m.a) v = uniform(g);
    if (std::abs(det(m)) < 1e-3) continue;
    Mat4d id = m * inverse(m);
    CHECK(max_abs_diff(id, Mat4d::identity()) < 1e-10);
  }
  Mat4d sing{};  // rank 0
  CHECK(det(sing) == 0.0);
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}

TEST_CASE("exp_traceless agrees with the series") {
  auto g = rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Mat2c a = random_mat2(g);
    a(1, 1) = -a(0, 0);  // traceless
    // Scaled-series reference.
    Mat2c series = Mat2c::identity();
    Mat2c term = Mat2c::identity();
    for (int k = 1; k <= 30; ++k) {
      term = (cplx(1.0 / k)) * (term * a);
      series = series + term;
    }
    CHECK(max_abs_diff(exp_traceless(a), series) < 1e-12);
  }
  // Near-zero argument path.
  Mat2c tiny;
  tiny(0, 1) = 1e-9;
  Mat2c e = exp_traceless(tiny);
  CHECK(std::abs(e(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(e(0, 1) - 1e-9) < 1e-18);
}

TEST_CASE("hermitian_eigenvalues satisfies the trace identities") {
  auto g = rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    // Random Hermitian matrix.
    Mat4c m;
    for (int i = 0; i < 4; ++i) {
      m(i, i) = uniform(g);
      for (int j = i + 1; j < 4; ++j) {
        cplx v = random_cplx(g);
        m(i, j) = v;
        m(j, i) = std::conj(v);
      }
    }
    auto ev = hermitian_eigenvalues(m);
    // Newton-identity oracle: power sums of eigenvalues equal traces of powers.
    Mat4c p = m;
    for (int k = 1; k <= 4; ++k) {
      double sum = 0;
      for (double e : ev) sum += std::pow(e, k);
      CHECK(sum == doctest::Approx(trace(p).real()).epsilon(1e-9));
      p = p * m;
    }
    CHECK(std::abs(trace(m).imag()) < 1e-12);
  }
  // Known diagonal case.
  Mat4c d;
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = -2;
  d(3, 3) = 5;
  auto ev = hermitian_eigenvalues(d);
  CHECK(ev[0] == doctest::Approx(-2));
  CHECK(ev[1] == doctest::Approx(1));
  CHECK(ev[2] == doctest::Approx(3));
  CHECK(ev[3] == doctest::Approx(5));
}
