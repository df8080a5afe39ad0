#pragma once

// Tangent calculus of the twistor space along the section determined by J:
// the fibre-scaled metric h_t, horizontal-lift coefficients, second covariant
// derivatives of the twistor representative, the tension field split into
// vertical and horizontal parts, and the normal projection residual.

#include <array>

#include "twistor/curvature.hpp"
#include "twistor/hermitian.hpp"

namespace twistor {

struct BasepointMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateSpan : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tangent vector of the twistor space at a point of the unit sphere bundle,
/// split into its horizontal (tangent) and vertical (bivector) parts.
struct TwistorVec {
  Vec4 horizontal{};
  Bivector vertical{};
  Bivector base{};  // the basepoint bivector

  TwistorVec operator+(const TwistorVec& o) const;
  TwistorVec operator*(double k) const;
};

struct TwistorContext {
  double t = 1.0;
  Bivector basepoint{};
  double tol = kDefaultTol;
};

/// h_t(u,v) = g(u.h, v.h) + t g(u.v, v.v). Throws BasepointMismatch when the
/// vectors live at different points.
double h_t(const TwistorContext& ctx, const TwistorVec& u, const TwistorVec& v);
double h_t_norm(const TwistorContext& ctx, const TwistorVec& u);

/// Fibre-coordinate velocity of the horizontal lift of X at sigma, in the
/// coordinates y_j = g(., s_j): component k is -sum_j y_j g(nabla_X s_j, s_k).
std::array<double, 3> horizontal_lift_coeffs(const Connection& conn,
                                             const SelfDualTriple& s_frame,
                                             const Vec4& x,
                                             const Bivector& sigma);

/// Second covariant derivative of the twistor representative,
/// nabla^2_{E_i E_j} = nabla_{E_i} nabla_{E_j} - nabla_{nabla_{E_i}E_j}.
Bivector second_cov_frakJ(const Connection& conn, const HermitianData& h,
                          int i, int j);

Bivector trace_second_cov(const Connection& conn, const HermitianData& h);

/// Symmetric second fundamental quantity of the map at the frame pair (i,j).
TwistorVec tilde_nabla_frakJ(const TwistorContext& ctx, const Connection& conn,
                             const CurvatureData& curv, const HermitianData& h,
                             int i, int j);

/// Tension field at the section point: vertical part is the projection of the
/// traced second derivative orthogonally to the representative, horizontal
/// part is -t sum_i R(frakJ x nabla_{E_i} frakJ) E_i.
TwistorVec tension(const TwistorContext& ctx, const Connection& conn,
                   const CurvatureData& curv, const HermitianData& h);

/// h_t-distance of v to the tangent span of the imbedded section,
/// span{ (E_i)^h + nabla_{E_i} frakJ }.
double normal_residual(const TwistorContext& ctx, const HermitianData& h,
                       const TwistorVec& v);

}  // namespace twistor
