#pragma once

// Levi-Civita connection and curvature of a homogeneous 4-manifold given by
// constant structure constants on an orthonormal frame, in the convention
// R(X,Y) = nabla_{[X,Y]} - [nabla_X, nabla_Y].

#include <string>

#include "twistor/frame_algebra.hpp"

namespace twistor {

struct NotALieAlgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Homogeneous geometry: [E_i, E_j] = sum_k c^k_{ij} E_k, all c constant.
struct FrameManifold {
  std::string name;
  // c[k][i][j]
  double c[4][4][4] = {};

  void set_bracket(int i, int j, int k, double v);  // 0-based, sets +/- pair
  Vec4 bracket(const Vec4& u, const Vec4& v) const;

  /// Max component violation of the Jacobi identity.
  double jacobi_residual() const;
  double max_abs() const;
};

/// nabla_{E_i} E_j = sum_k Gamma^k_{ij} E_k.
struct Connection {
  double gamma[4][4][4] = {};  // gamma[k][i][j]

  /// Matrix of nabla_{E_i} acting on constant-coefficient fields.
  Endo4 dir(int i) const;
  Vec4 apply(int i, const Vec4& y) const;
  /// nabla_X Y for constant-coefficient X, Y.
  Vec4 apply(const Vec4& x, const Vec4& y) const;
  /// Induced derivative on constant-coefficient bivector fields.
  Bivector apply_biv(int i, const Bivector& b) const;
  double max_abs() const;
};

struct CurvatureData {
  // r[l][i][j][k]: R(E_i,E_j)E_k = sum_l r[l][i][j][k] E_l
  double r[4][4][4][4] = {};
  Endo4 ricci{};
  double scalar = 0;

  Vec4 curv(int i, int j, int k) const;
  /// Trilinear extension R(X,Y)Z.
  Vec4 curv(const Vec4& x, const Vec4& y, const Vec4& z) const;
  /// g(R(E_i,E_j)E_k, E_l).
  double component(int i, int j, int k, int l) const;
  double max_abs() const;
};

/// Self-adjoint curvature operator on bivectors,
/// g(Rop(X^Y), Z^T) = g(R(X,Y)Z, T).
struct CurvatureOperator {
  double m[6][6] = {};

  Bivector apply(const Bivector& a) const;
  double pairing(const Bivector& a, const Bivector& b) const;
};

/// Koszul formula: 2 Gamma^k_{ij} = c^k_{ij} - c^i_{jk} + c^j_{ki}.
/// Throws NotALieAlgebra when the Jacobi identity fails beyond jacobi_tol.
Connection levi_civita(const FrameManifold& m, double jacobi_tol = kJacobiTol);

/// Curvature, Ricci (rho(X,Y) = sum_i g(R(X,E_i)Y, E_i)) and scalar.
CurvatureData curvature(const FrameManifold& m, const Connection& conn);

/// R(a) = sum_{i<j} a^{ij} R(E_i,E_j) as an endomorphism of the tangent space.
Endo4 curvature_endo(const CurvatureData& r, const Bivector& a);

CurvatureOperator curvature_operator(const CurvatureData& r);

/// Star-Ricci rho*(X,Y) = sum_i g(R(J E_i, X) J Y, E_i).
Endo4 star_ricci(const CurvatureData& r, const Endo4& j);

double trace(const Endo4& m);

}  // namespace twistor
