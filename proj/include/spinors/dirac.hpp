// Dirac (4-spinor) algebra built on the 2-spinor space: the Clifford map and its
// extension to bivectors, Weyl/Dirac bases, the natural Hermitian product k, observer
// metrics and the discrete C/P/T operations.
#pragma once

#include "spinors/algebra.hpp"

namespace spinors {

// A Dirac spinor (u, chi) with u a 2-spinor and chi a conjugate-dual spinor, stored as
// the four Weyl-basis components (u^1, u^2, -chi_1, -chi_2).
struct DiracSpinor {
  Vec4c w{};

  Vec2c u() const { return {w[0], w[1]}; }
  Vec2c chi() const { return {-w[2], -w[3]}; }
  static DiracSpinor from_parts(const Vec2c& u, const Vec2c& chi) {
    return DiracSpinor{{u[0], u[1], -chi[0], -chi[1]}};
  }
};

DiracSpinor operator+(const DiracSpinor& x, const DiracSpinor& y);
DiracSpinor operator-(const DiracSpinor& x, const DiracSpinor& y);
DiracSpinor operator*(cplx s, const DiracSpinor& x);

enum class SpinBasis { weyl, dirac };

// Endomorphism of 4-spinor space with an explicit basis tag. Mixing tags in arithmetic
// is a logic error rather than a silent misuse.
struct EndW {
  Mat4c m{};
  SpinBasis basis = SpinBasis::weyl;
};

EndW operator+(const EndW& x, const EndW& y);
EndW operator-(const EndW& x, const EndW& y);
EndW operator*(const EndW& x, const EndW& y);
EndW operator*(cplx s, const EndW& x);
DiracSpinor apply(const EndW& op, const DiracSpinor& psi);
EndW identity_w();

// Change of basis between the Weyl components and the Dirac components; involutive.
// DiracSpinor storage is always Weyl, so spinors convert at the component level.
Vec4c basis_change(const Vec4c& comps, SpinBasis from, SpinBasis to);
EndW basis_change(const EndW& op, SpinBasis to);
// Coordinates of the Dirac basis vectors in the Weyl basis (orthogonal).
const Mat4d& weyl_to_dirac_matrix();

// The Clifford map: gamma(y)(u, chi) = sqrt(2) (y . chi, u . y-flat), complex linear in y.
EndW gamma(const ComplexTensorUU& y);
EndW gamma(const MinkVector& y);
// gamma of the Pauli basis vector tau_lam.
EndW gamma_pauli(int lam);

// gamma(y) gamma(y') + gamma(y') gamma(y) - 2 g(y,y') 1; identically zero in exact
// arithmetic.
EndW clifford_defect(const ComplexTensorUU& y, const ComplexTensorUU& y2);

// Hermitian product k((u,chi),(u',chi')) = <chi-bar, u'> + <chi', u-bar>, signature (++--).
cplx k_product(const DiracSpinor& psi, const DiracSpinor& phi);
// Covector a with <a, phi> = k(psi, phi) for all phi, in the dual Weyl basis.
Vec4c dirac_adjoint(const DiracSpinor& psi);

// Volume element gamma_eta = gamma_0 gamma_1 gamma_2 gamma_3.
EndW gamma_eta();

// Charge conjugation: antilinear involution determined by exp(i t) eps.
DiracSpinor charge_conjugation(const DiracSpinor& psi, double t = 0.0,
                               const SymplecticForm& eps = SymplecticForm());
// Parity is gamma(tau_0) for the observer defining the Pauli basis.
EndW parity();
// Time reversal: gamma_eta gamma_0 C (antilinear); squares to -1.
DiracSpinor time_reversal(const DiracSpinor& psi, double t = 0.0,
                          const SymplecticForm& eps = SymplecticForm());

// Observer Hermitian metric h(psi, phi) = k(gamma(tau_obs) psi, phi); positive definite
// for a unit future-pointing observer.
cplx observer_h(const DiracSpinor& psi, const DiracSpinor& phi);
cplx observer_h(const DiracSpinor& psi, const DiracSpinor& phi, const MinkVector& tau_obs);

// Antisymmetric 2-tensor on H, components Phi^{lam mu} in an orthonormal frame.
struct Bivector {
  Mat4d comps{};

  // Validates antisymmetry (componentwise, 1e-12 relative).
  static Bivector from_components(const Mat4d& comps);
  static Bivector wedge(const Vec4d& x, const Vec4d& y);  // (1/2)(x(x)y - y(x)x)
};

// Mixed components Phi^lam_mu obtained by lowering the second index with eta.
Mat4d lower_second_index(const Mat4d& raised);
Mat4d raise_second_index(const Mat4d& mixed);

// Extension of the Clifford map to bivectors: hat_gamma(Phi) = Phi^{lam mu} gamma_lam gamma_mu
// (sum over the antisymmetric tensor components). (1/4) hat_gamma(Phi) is the spin
// representation of the Lorentz-algebra element Phi-flat.
EndW hat_gamma(const Bivector& phi);

}  // namespace spinors
