// Conversion between a complex-linear 2-spinor connection and the objects it induces:
// the real scalar pair (G, Y), the antisymmetric connection on Hermitian tensors, the
// spacetime connection through a tetrad, torsion, the curvature relation, and the
// decomposition of connection differences.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spinors/dirac.hpp"

namespace spinors {

// Chart-valued coefficient fields; evaluation must be pure.
struct SpinorConnectionField {
  // x -> (Lambda_a)^A_B for a = 0..3
  std::function<std::array<Mat2c, 4>(const Vec4d&)> coeffs;
  std::string chart = "cartesian";
};

struct HConnectionField {
  // x -> mixed components (Gamma~_a)^lam_mu for a = 0..3; lowered-index antisymmetric.
  std::function<std::array<Mat4d, 4>(const Vec4d&)> coeffs;
};

struct CovectorField {
  std::function<Vec4d(const Vec4d&)> coeffs;  // x -> omega_a
};

// Scaled tetrad theta(lam, a) = Theta_a^lam, with an optional analytic derivative
// dtheta[a] = partial_a Theta; finite differences are used when it is absent.
struct TetradField {
  std::function<Mat4d(const Vec4d&)> theta;
  std::function<std::array<Mat4d, 4>(const Vec4d&)> dtheta;
};

struct InducedScalars {
  Vec4d G{};
  Vec4d Y{};
};

// Torsion value at a point: comps[c](a, b) = T^c_ab, antisymmetric in (a, b).
struct TorsionValue {
  std::array<Mat4d, 4> comps{};
};

// Scalar parts of a spinor connection: G_a = Re tr(Lambda_a)/2, Y_a = Im tr(Lambda_a)/2.
InducedScalars induced_scalars(const std::array<Mat2c, 4>& lambda);

// Frame components of the endomorphism L (x) 1 + 1 (x) conj(L) of H.
Mat4d induced_endh(const Mat2c& L);
// Induced connection on H: real, lowered-antisymmetric, traceless.
std::array<Mat4d, 4> induced_h_connection(const std::array<Mat2c, 4>& lambda);

// Half trace over the conjugate spinor indices of a (mixed-component) endomorphism of H:
// the inverse of induced_endh on traceless parts.
Mat2c half_trace_endh(const Mat4d& mixed);

// Rebuild the spinor connection from its induced pieces; exact inverse of the pair
// (induced_scalars, induced_h_connection). Validates the Gamma~ invariants.
std::array<Mat2c, 4> reconstruct_spinor(const InducedScalars& gy,
                                        const std::array<Mat4d, 4>& h_conn);
Mat2c reconstruct_spinor_direction(double G, double Y, const Mat4d& h_conn);

// Connection induced on 4-spinors: block (Lambda on the u slot, minus its adjoint on the
// chi slot), equal to i Y 1 + (1/4) Gamma~^{lam mu} gamma_lam gamma_mu.
std::array<EndW, 4> four_spinor_connection(const Vec4d& Y, const std::array<Mat4d, 4>& h_conn);

// Spacetime connection in the tetrad frame: Gamma_a = Gamma~_a + 2 G_a 1.
std::array<Mat4d, 4> spacetime_connection(const Mat4d& theta, const std::array<Mat4d, 4>& h_conn,
                                          const Vec4d& G);

// Torsion of the connection determined by (tetrad, Gamma~, G), by centered differences
// of the tetrad at spacing h (analytic derivative used when the field provides one).
TorsionValue torsion(const TetradField& tetrad, const HConnectionField& h_conn,
                     const CovectorField& G, const Vec4d& x, double h);

// Regular 2-plane slice of connection samples: node (i, j) sits at
// origin + (i - (na-1)/2) h e_a + (j - (nb-1)/2) h e_b.
struct ConnectionGrid2D {
  Vec4d origin{};
  int dir_a = 0, dir_b = 1;
  double h = 0;
  int na = 0, nb = 0;
  std::vector<std::array<Mat2c, 4>> samples;

  const std::array<Mat2c, 4>& at(int i, int j) const { return samples[i * nb + j]; }
  static ConnectionGrid2D sample(const SpinorConnectionField& field, const Vec4d& center,
                                 int dir_a, int dir_b, double h, int na, int nb);
};

// Residual of the curvature relation between the spinor connection and its induced
// fields at the center node, restricted to the grid 2-plane. The left side uses
// centered stencils at h, the right side the same stencils at 2h, so the residual is a
// genuine truncation difference: O(h^2), ratio 4 under step halving.
double curvature_relation_check(const ConnectionGrid2D& grid);

// Curvature 2-form component of a coefficient field along the plane directions,
// by centered differences at `stride` grid steps.
Mat2c curvature_component(const ConnectionGrid2D& grid, int i, int j, int stride);

struct ConnectionDifference {
  Vec4d alpha{};                 // imaginary trace part per direction
  Vec4d real_trace{};            // real trace part, reported separately
  std::array<Mat2c, 4> phi{};    // traceless parts
};

// theta = Lambda - Lambda' = (rho + i alpha) 1 + phi with Tr phi = 0.
ConnectionDifference connection_difference_decompose(const std::array<Mat2c, 4>& lambda,
                                                     const std::array<Mat2c, 4>& lambda_prime);

// Centered first derivative of a closure field along a chart direction.
template <class T, class F>
T fd_partial(const F& f, const Vec4d& x, int dir, double h) {
  Vec4d xp = x, xm = x;
  xp[dir] += h;
  xm[dir] -= h;
  return (1.0 / (2.0 * h)) * (f(xp) - f(xm));
}

}  // namespace spinors
