#include "doctest.h"
#include "spinors/connection.hpp"
#include "spinors/dirac.hpp"
#include "test_helpers.hpp"

using namespace spinors;
using namespace spinors::testing;

namespace {

Mat4c block_diag(const Mat2c& A, const Mat2c& D) {
  Mat4c m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = A(i, j);
      m(i + 2, j + 2) = D(i, j);
    }
  return m;
}

DiracSpinor random_psi(std::mt19937_64& g) { return DiracSpinor{random_vec4c(g)}; }

}  // namespace

TEST_CASE("gamma of the Pauli vectors: matrices and Clifford squares") {
  auto tau = pauli_basis();

  // Weyl-basis gamma_0 has minus-identity off-diagonal blocks (the chi slots of the
  // Weyl basis carry a sign).
  Mat4c g0 = gamma(tau[0]).m;
  Mat4c expect;
  expect(0, 2) = expect(1, 3) = expect(2, 0) = expect(3, 1) = -1.0;
  CHECK(max_abs_diff(g0, expect) < 1e-14);

  EndW sq0 = gamma(tau[0]) * gamma(tau[0]);
  CHECK(max_abs_diff(sq0.m, Mat4c::identity()) < 1e-14);
  EndW sq1 = gamma(tau[1]) * gamma(tau[1]);
  CHECK(max_abs_diff(sq1.m, cplx(-1) * Mat4c::identity()) < 1e-14);

  // In the Dirac basis gamma_0 is diag(1, 1, -1, -1).
  Mat4c g0d = basis_change(gamma(tau[0]), SpinBasis::dirac).m;
  Mat4c expd;
  expd(0, 0) = expd(1, 1) = 1.0;
  expd(2, 2) = expd(3, 3) = -1.0;
  CHECK(max_abs_diff(g0d, expd) < 1e-14);
}

TEST_CASE("clifford_defect vanishes") {
  auto tau = pauli_basis();
  CHECK(max_abs(clifford_defect(tau[0].tensor(), tau[1].tensor()).m) < 1e-14);
  CHECK(max_abs(clifford_defect(tau[2].tensor(), tau[2].tensor()).m) < 1e-14);

  auto g = rng(21);
  for (int i = 0; i < 500; ++i) {
    MinkVector y = random_mink_normalized(g);
    MinkVector y2 = random_mink_normalized(g);
    CHECK(max_abs(clifford_defect(y.tensor(), y2.tensor()).m) <= 1e-12);
  }
  // The Clifford relation holds complex-bilinearly as well.
  for (int i = 0; i < 100; ++i) {
    ComplexTensorUU y{random_mat2(g)}, y2{random_mat2(g)};
    CHECK(max_abs(clifford_defect(y, y2).m) <= 1e-12);
  }
}

TEST_CASE("gamma is linear in its argument") {
  auto g = rng(22);
  for (int i = 0; i < 50; ++i) {
    ComplexTensorUU y{random_mat2(g)}, y2{random_mat2(g)};
    cplx a = random_cplx(g), b = random_cplx(g);
    ComplexTensorUU comb{a * y.m + b * y2.m};
    Mat4c lhs = gamma(comb).m;
    Mat4c rhs = (a * gamma(y).m) + (b * gamma(y2).m);
    CHECK(max_abs_diff(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("k product: signature, Hermiticity, Dirac adjoint") {
  // Dirac basis vectors in Weyl components.
  auto dirac_vec = [](int alpha) {
    Vec4c d{};
    d[alpha] = 1.0;
    return DiracSpinor{basis_change(d, SpinBasis::dirac, SpinBasis::weyl)};
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      cplx k = k_product(dirac_vec(a), dirac_vec(b));
      double expect = (a == b) ? (a < 2 ? 1.0 : -1.0) : 0.0;
      CHECK(std::abs(k - expect) < 1e-14);
    }

  auto g = rng(23);
  for (int i = 0; i < 200; ++i) {
    DiracSpinor psi = random_psi(g), phi = random_psi(g);
    // Hermitian pairing.
    CHECK(std::abs(k_product(psi, phi) - std::conj(k_product(phi, psi))) < 1e-13);
    CHECK(std::abs(k_product(psi, psi).imag()) < 1e-13);
    // Dual pairing against the adjoint.
    Vec4c adj = dirac_adjoint(psi);
    cplx paired = adj[0] * phi.w[0] + adj[1] * phi.w[1] + adj[2] * phi.w[2] + adj[3] * phi.w[3];
    CHECK(std::abs(paired - k_product(psi, phi)) < 1e-13);
  }

  // No <u, u'> term: pure u-part spinors pair to zero.
  DiracSpinor pu1 = DiracSpinor::from_parts({cplx(1), cplx(0.5)}, {});
  DiracSpinor pu2 = DiracSpinor::from_parts({cplx(0, 1), cplx(2)}, {});
  CHECK(std::abs(k_product(pu1, pu2)) < 1e-15);

  // Pure u-part spinor: adjoint populates only the conjugate-u slot.
  Vec4c adj = dirac_adjoint(DiracSpinor::from_parts({cplx(1), cplx(0)}, {}));
  CHECK(std::abs(adj[0]) < 1e-15);
  CHECK(std::abs(adj[1]) < 1e-15);
  CHECK(std::abs(adj[2] + 1.0) < 1e-15);
}

TEST_CASE("gamma is k-self-adjoint for Hermitian arguments") {
  auto g = rng(24);
  for (int i = 0; i < 300; ++i) {
    MinkVector y = random_mink_normalized(g);
    DiracSpinor psi = random_psi(g), phi = random_psi(g);
    cplx lhs = k_product(apply(gamma(y), psi), phi);
    cplx rhs = k_product(psi, apply(gamma(y), phi));
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("basis change between Weyl and Dirac components") {
  // First Weyl vector in Dirac coordinates.
  Vec4c e1{cplx(1), cplx(0), cplx(0), cplx(0)};
  Vec4c d = basis_change(e1, SpinBasis::weyl, SpinBasis::dirac);
  double s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(d, Vec4c{cplx(s), cplx(0), cplx(s), cplx(0)}) < 1e-14);

  auto g = rng(25);
  for (int i = 0; i < 100; ++i) {
    Vec4c w = random_vec4c(g);
    Vec4c rt = basis_change(basis_change(w, SpinBasis::weyl, SpinBasis::dirac), SpinBasis::dirac,
                            SpinBasis::weyl);
    CHECK(max_abs_diff(rt, w) < 1e-13);
  }

  // Operator conversion is conjugation by the explicit basis matrix.
  const Mat4d& C = weyl_to_dirac_matrix();
  for (int i = 0; i < 20; ++i) {
    Mat4c m;
    for (auto& v : m.a) v = random_cplx(g);
    EndW opw{m, SpinBasis::weyl};
    Mat4c expect = adjoint(complexify(C)) * m * complexify(C);
    CHECK(max_abs_diff(basis_change(opw, SpinBasis::dirac).m, expect) < 1e-13);
  }

  // Mixing tags is an error.
  EndW a{Mat4c::identity(), SpinBasis::weyl};
  EndW b{Mat4c::identity(), SpinBasis::dirac};
  CHECK_THROWS_AS(a * b, std::logic_error);
  CHECK_THROWS_AS(a + b, std::logic_error);
}

TEST_CASE("gamma_eta: volume element") {
  EndW ge = gamma_eta();
  // Block-diagonal in the Weyl basis.
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j) {
      CHECK(std::abs(ge.m(i, j)) < 1e-14);
      CHECK(std::abs(ge.m(j, i)) < 1e-14);
    }
  // Frozen regression: square is minus the identity.
  CHECK(max_abs_diff((ge * ge).m, cplx(-1) * Mat4c::identity()) < 1e-14);
  // Anticommutes with every gamma_lam.
  for (int l = 0; l < 4; ++l) {
    EndW anti = ge * gamma_pauli(l) + gamma_pauli(l) * ge;
    CHECK(max_abs(anti.m) < 1e-14);
  }
}

TEST_CASE("charge conjugation is an antilinear involution") {
  auto g = rng(26);
  for (int i = 0; i < 100; ++i) {
    double t = uniform(g, -3, 3);
    SymplecticForm eps(std::exp(cplx(0, uniform(g, -3, 3))));
    DiracSpinor psi = random_psi(g);
    DiracSpinor cc = charge_conjugation(charge_conjugation(psi, t, eps), t, eps);
    CHECK(max_abs_diff(cc.w, psi.w) < 1e-13);
  }
  // Antilinearity.
  DiracSpinor psi = random_psi(g);
  DiracSpinor lhs = charge_conjugation(cplx(0, 1) * psi);
  DiracSpinor rhs = cplx(0, -1) * charge_conjugation(psi);
  CHECK(max_abs_diff(lhs.w, rhs.w) < 1e-14);

  // Block formula at t = 0 on a pure u spinor: C(u, 0) = (0, -eps-bar-flat(u-bar)).
  Vec2c u = random_vec2(g);
  DiracSpinor c = charge_conjugation(DiracSpinor::from_parts(u, {}));
  CHECK(max_abs(c.u()) < 1e-14);
  CoSpinor uf = eps_flat(TwoSpinor{u});
  Vec2c expect{-std::conj(uf.c[0]), -std::conj(uf.c[1])};
  CHECK(max_abs_diff(c.chi(), expect) < 1e-14);
}

TEST_CASE("parity and time reversal") {
  EndW p = parity();
  CHECK(max_abs_diff((p * p).m, Mat4c::identity()) < 1e-14);

  auto g = rng(27);
  DiracSpinor psi = random_psi(g);
  // Antilinear.
  DiracSpinor lhs = time_reversal(cplx(0, 1) * psi);
  DiracSpinor rhs = cplx(0, -1) * time_reversal(psi);
  CHECK(max_abs_diff(lhs.w, rhs.w) < 1e-13);
  // Frozen square: T^2 = -1.
  for (int i = 0; i < 50; ++i) {
    DiracSpinor x = random_psi(g);
    DiracSpinor tt = time_reversal(time_reversal(x));
    CHECK(max_abs_diff(tt.w, (cplx(-1) * x).w) < 1e-13);
  }
}

TEST_CASE("observer Hermitian metric") {
  auto g = rng(28);
  for (int i = 0; i < 1000; ++i) {
    DiracSpinor psi = random_psi(g);
    cplx h = observer_h(psi, psi);
    CHECK(h.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(h.real() >= 0.0);
    double norm = max_abs(psi.w);
    if (norm > 1e-3) CHECK(h.real() > 0.0);
  }
  // Eigenvalue oracle on the Gram matrix of the Weyl basis: all eigenvalues positive.
  Mat4c gram;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Vec4c ea{}, eb{};
      ea[a] = 1;
      eb[b] = 1;
      gram(a, b) = observer_h(DiracSpinor{ea}, DiracSpinor{eb});
    }
  auto ev = hermitian_eigenvalues(gram);
  for (double e : ev) CHECK(e > 0.5);

  // Restriction to the u block is the standard positive form |u1|^2 + |u2|^2.
  for (int i = 0; i < 100; ++i) {
    Vec2c u = random_vec2(g);
    DiracSpinor psi = DiracSpinor::from_parts(u, {});
    double expect = std::norm(u[0]) + std::norm(u[1]);
    CHECK(observer_h(psi, psi).real() == doctest::Approx(expect).epsilon(1e-12));
  }

  // Normalization of the observer form: its 2x2 matrix is the identity, g(h, h) = 2 det = 2.
  Mat2c hmat;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Vec2c ea{}, eb{};
      ea[a] = 1;
      eb[b] = 1;
      hmat(a, b) = observer_h(DiracSpinor::from_parts(ea, {}), DiracSpinor::from_parts(eb, {}));
    }
  CHECK(std::abs(2.0 * det(hmat) - 2.0) < 1e-14);
}

TEST_CASE("hat_gamma matches the block pair built from the half trace") {
  // Zero bivector.
  CHECK(max_abs(hat_gamma(Bivector{}).m) < 1e-15);

  auto quarter_hat = [](const Bivector& b) { return (cplx(0.25) * hat_gamma(b)).m; };
  // Independent route: half-trace the lowered bivector and assemble (phi, -phi-bar*).
  auto block_pair = [](const Bivector& b) {
    Mat2c phi = half_trace_endh(lower_second_index(b.comps));
    return block_diag(phi, cplx(-1) * adjoint(phi));
  };

  // tau_1 ^ tau_0 with unit coefficient: block-diagonal with traceless blocks.
  Bivector b10 = Bivector::wedge({0, 1, 0, 0}, {1, 0, 0, 0});
  Mat4c q = quarter_hat(b10);
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j) {
      CHECK(std::abs(q(i, j)) < 1e-14);
      CHECK(std::abs(q(j, i)) < 1e-14);
    }
  CHECK(std::abs(q(0, 0) + q(1, 1)) < 1e-14);
  CHECK(std::abs(q(2, 2) + q(3, 3)) < 1e-14);
  CHECK(std::abs(trace(q)) < 1e-14);
  CHECK(max_abs_diff(q, block_pair(b10)) < 1e-14);

  auto g = rng(29);
  // Boost-type bivectors (no purely spatial components) and fully random ones.
  for (int i = 0; i < 200; ++i) {
    Mat4d m{};
    for (int j = 1; j < 4; ++j) {
      double v = uniform(g);
      m(0, j) = v;
      m(j, 0) = -v;
    }
    Bivector b{m};
    CHECK(max_abs_diff(quarter_hat(b), block_pair(b)) <= 1e-12);
  }
  for (int i = 0; i < 200; ++i) {
    Bivector b{random_antisymmetric(g)};
    Mat2c phi = half_trace_endh(lower_second_index(b.comps));
    CHECK(std::abs(trace(phi)) <= 1e-14);
    CHECK(max_abs_diff(quarter_hat(b), block_pair(b)) <= 1e-12);
  }
}

TEST_CASE("Bivector validates antisymmetry") {
  Mat4d bad{};
  bad(0, 1) = 1.0;
  bad(1, 0) = 1.0;
  CHECK_THROWS_AS(Bivector::from_components(bad), std::invalid_argument);
}
