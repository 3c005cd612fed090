// Two-spinor algebra: the antisymmetric 2-form on spinor space, index raising and
// lowering, the induced Lorentz metric on Hermitian 2x2 tensors, Pauli bases and
// the null-cone decomposition.
#pragma once

#include <optional>

#include "spinors/numerics.hpp"

namespace spinors {

// Contravariant 2-spinor, components u^A in a fixed normalized basis.
struct TwoSpinor {
  Vec2c c{};
};

// Covariant spinor, components lam_A in the dual basis.
struct CoSpinor {
  Vec2c c{};
};

// Sign of eps_sharp(eps_flat(u)) relative to u, frozen from the 2x2 enumeration oracle.
inline constexpr double kEpsRoundtripSign = -1.0;

// Normalized antisymmetric 2-form on spinor space. The matrix is phase * Ricci with
// the Ricci matrix fixed to eps_{12} = +1; index raising uses conj(phase) * Ricci so
// that raising o lowering = kEpsRoundtripSign * identity for every phase.
class SymplecticForm {
 public:
  SymplecticForm() = default;
  explicit SymplecticForm(cplx phase);

  cplx phase() const { return phase_; }
  Mat2c matrix() const;          // eps_{AB}
  Mat2c inverse_matrix() const;  // eps^{AB}

  cplx apply(const TwoSpinor& u, const TwoSpinor& v) const;      // eps(u, v)
  cplx apply_inverse(const CoSpinor& l, const CoSpinor& m) const;

 private:
  cplx phase_{1.0, 0.0};
};

// (u^flat)_B = eps_{AB} u^A
CoSpinor eps_flat(const TwoSpinor& u, const SymplecticForm& eps = SymplecticForm());
// (lam^sharp)^B = eps^{AB} lam_A
TwoSpinor eps_sharp(const CoSpinor& l, const SymplecticForm& eps = SymplecticForm());

// General element of the complexified Minkowski space: arbitrary 2x2 complex w^{A Adot}.
struct ComplexTensorUU {
  Mat2c m{};
};

// Hermitian tensor, i.e. an element of real Minkowski space H. Convertible between the
// Hermitian matrix w^{A Adot} and the four real Pauli components w^lambda with
// w^{A Adot} = (1/sqrt 2) sigma_lambda w^lambda.
class MinkVector {
 public:
  MinkVector() = default;
  static MinkVector from_pauli(const Vec4d& comps);
  // Validates hermiticity of the input (relative tolerance 1e-12).
  static MinkVector from_hermitian(const Mat2c& herm);

  const Mat2c& herm() const { return herm_; }
  Vec4d pauli() const;
  ComplexTensorUU tensor() const { return ComplexTensorUU{herm_}; }

 private:
  Mat2c herm_{};
};

MinkVector operator+(const MinkVector& x, const MinkVector& y);
MinkVector operator-(const MinkVector& x, const MinkVector& y);
MinkVector operator*(double s, const MinkVector& x);

// Pauli matrices: sigma_0 = 1, sigma_1..3 the standard ones.
const Mat2c& pauli_sigma(int lam);
// sigma-bar_lambda = (1, -sigma_j); shows up in the chi-block of the Dirac map.
const Mat2c& pauli_sigma_bar(int lam);

// Unique splitting w = h + i a into Hermitian parts.
std::pair<MinkVector, MinkVector> herm_decompose(const ComplexTensorUU& w);

// g(w, w') = eps_{AB} eps-bar_{AdotBdot} w^{A Adot} w'^{B Bdot}; g(w,w) = 2 det w.
// Independent of the phase of eps.
cplx g_bilinear(const ComplexTensorUU& w, const ComplexTensorUU& w2);
double g_bilinear(const MinkVector& w, const MinkVector& w2);

// Orthonormal basis tau_0..tau_3 of H with g(tau_lam, tau_mu) = 2 d0_lam d0_mu - d_lam,mu.
std::array<MinkVector, 4> pauli_basis();

// Outer product u (x) u-bar, always a future null element of H.
MinkVector null_from_spinor(const TwoSpinor& u);

struct NullDecomposition {
  TwoSpinor u;
  double sign;  // +1 future, -1 past
};

// If w is null (|det| <= 1e-10 ||w||^2) and nonzero, recover (u, s) with w = s u (x) u-bar,
// u unique up to phase. Returns nothing for non-null or zero input.
std::optional<NullDecomposition> null_decompose(const MinkVector& w);

}  // namespace spinors
