// Fermi transport along timelike worldlines: the transport bivector built from the
// 4-acceleration, the corrected connection on H, its 2-spinor and 4-spinor lifts with
// their one-parameter gauge family, and fixed-step RK4 integration of the transports.
#pragma once

#include <vector>

#include "spinors/backgrounds.hpp"

namespace spinors {

// Pointwise data of the Fermi correction at a worldline sample, all in the background
// orthonormal frame.
struct FermiData {
  MinkVector tau;        // unit tangent
  MinkVector nabla_tau;  // covariant acceleration along the curve
  Bivector Phi;          // 2 (nabla tau) ^ tau
  Mat4d Phi_flat;        // mixed components of the second-index lowering, End(H)
  Mat2c phi;             // half trace over conjugate indices, traceless
};

enum class TransportKind { vector_h, two_spinor, four_spinor };

// State of a transported object. Components are frame components: 4 real values for a
// vector (stored in the real parts), 2 complex for a 2-spinor, 4 complex (Weyl) for a
// 4-spinor.
struct TransportState {
  TransportKind kind = TransportKind::vector_h;
  Vec4c components{};
  double s = 0;
};

int component_count(TransportKind kind);

// Frame components of the worldline tangent at proper time s.
Vec4d tangent_frame_components(const Background& bg, const Worldline& line, double s);

// Fermi data at proper time s. Throws if the tangent is not timelike; an acceleration
// below 1e-14 in norm short-circuits to the parallel-transport data (Phi = 0).
FermiData fermi_data(const Worldline& line, double s, const Background& bg);

// Fermi derivative of a sampled section X (frame components as a function of proper
// time), with centered numeric s-derivatives at step h:
// D X = nabla X + g(nabla tau, X) tau - g(tau, X) nabla tau.
MinkVector fermi_derivative(const Worldline& line, const Background& bg,
                            const std::function<Vec4d(double)>& X, double s, double h);

// |d/ds g(X,Y) - g(DX,Y) - g(X,DY)| at s, all derivatives centered at step h; O(h^2).
double product_rule_residual(const Worldline& line, const Background& bg,
                             const std::function<Vec4d(double)>& X,
                             const std::function<Vec4d(double)>& Y, double s, double h);

// Generator matrices of the transports at proper time s (d/ds of the state equals the
// generator times the state).
Mat4d vector_transport_generator(const Worldline& line, double s, const Background& bg);
Mat2c spinor_fermi_generator(const Worldline& line, double s, const Background& bg, double alpha);
Mat4c four_spinor_fermi_generator(const Worldline& line, double s, const Background& bg,
                                  double alpha);

// Spinor Fermi connection coefficients Lambda + phi + i alpha 1 given precomputed Fermi
// data and the background connection contracted along the tangent.
Mat2c spinor_fermi_coefficients(const FermiData& fd, const Mat2c& lambda_tau, double alpha);
Mat4c four_spinor_fermi_coefficients(const FermiData& fd, const Mat2c& lambda_tau, double alpha);

// Extension of the contracted correction to arbitrary tangent vectors:
// v . Phi-flat = g(v, tau) (tau . Phi-flat).
Mat4d congruence_extension(const Mat4d& phi_flat_tau, const MinkVector& tau, const MinkVector& v);

struct TransportOptions {
  double s0 = 0;
  double s1 = 1;
  double step = 1e-3;
  std::function<double(double)> alpha;  // gauge term, optional (treated as zero)
  int store_every = 1;                  // keep every n-th step in the output
};

// Integrate the transport ODE with classical fixed-step RK4, evaluating the generator
// at the stage points. Returns the stored samples including both endpoints.
std::vector<TransportState> transport(const Worldline& line, const Background& bg,
                                      const TransportState& initial,
                                      const TransportOptions& opts);

// Same integrator with an explicit generator closure (d/ds state = generator * state);
// unused rows and columns of the 4x4 must be zero for lower-dimensional kinds.
std::vector<TransportState> transport_with_generator(const std::function<Mat4c(double)>& generator,
                                                     const TransportState& initial,
                                                     const TransportOptions& opts);

// Generator from samples at increasing nodes by componentwise cubic (Catmull-Rom)
// interpolation; supports backgrounds that can only be sampled along the curve.
std::function<Mat4c(double)> interpolated_generator(std::vector<double> nodes,
                                                    std::vector<Mat4c> values);

// Convenience wrappers for initial data.
TransportState vector_state(const Vec4d& comps, double s = 0);
TransportState two_spinor_state(const Vec2c& comps, double s = 0);
TransportState four_spinor_state(const DiracSpinor& psi, double s = 0);
Vec4d vector_components(const TransportState& st);

}  // namespace spinors
