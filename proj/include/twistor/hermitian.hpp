#pragma once

// Validation of a compatible almost complex structure and all J-derived
// tensors: fundamental form, twistor representative, covariant derivatives,
// Nijenhuis tensor, Lee form and the structure classification.

#include <array>

#include "twistor/curvature.hpp"
#include "twistor/frame_algebra.hpp"

namespace twistor {

struct NotAComplexStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotOrthogonal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WrongOrientation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotIntegrable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StructureClass { Kahler, Hermitian, AlmostKahler, Generic };

const char* to_string(StructureClass c);

/// Antisymmetric bilinear Nijenhuis tensor on the frame,
/// N(Y,Z) = -[Y,Z] + [JY,JZ] - J[Y,JZ] - J[JY,Z].
struct Nijenhuis {
  double n[4][4][4] = {};  // n[k][i][j]: N(E_i,E_j) = sum_k n[k][i][j] E_k

  Vec4 of_pair(int i, int j) const;
  /// Induced linear map on bivectors: N(a) = sum_{i<j} a^{ij} N(E_i,E_j).
  Vec4 of_bivector(const Bivector& a) const;
  double max_abs() const;
};

/// Constant-component 3-form, stored as the full antisymmetric array.
struct ThreeForm {
  double v[4][4][4] = {};

  double operator()(int i, int j, int k) const { return v[i][j][k]; }
  double eval(const Vec4& x, const Vec4& y, const Vec4& z) const;
  double max_abs() const;
};

struct HermitianData {
  Endo4 J{};
  Endo4 Omega{};   // Omega(X,Y) = g(JX,Y), entries Omega.m[i][j] = Omega(E_i,E_j)
  Bivector frakJ{};

  std::array<Endo4, 4> nablaJ{};       // (nabla_{E_i} J)
  std::array<Bivector, 4> nabla_frakJ{};
  Nijenhuis N{};
  std::array<double, 4> theta{};  // Lee form components
  Vec4 B{};                       // metric dual of theta
  Endo4 dtheta{};                 // dtheta(E_i,E_j)
  bool dtheta_one_one = false;
  ThreeForm dOmega{};
  Endo4 L{};  // L(X,Y) = (nabla_X theta)(Y) + theta(X) theta(Y)/2

  StructureClass cls = StructureClass::Generic;
  bool integrable = false;
  bool symplectic = false;
};

/// Checks J^2 = -Id, g-orthogonality and orientation compatibility
/// (self-duality of the twistor representative); fills Omega and frakJ.
HermitianData validate_J(const FrameManifold& m, const Endo4& j,
                         double tol = kDefaultTol);

std::array<Endo4, 4> nabla_J(const Connection& conn, const Endo4& j);
std::array<Bivector, 4> nabla_frakJ(const Connection& conn,
                                    const Bivector& frak_j);

Nijenhuis nijenhuis(const FrameManifold& m, const Endo4& j);

/// Lee form theta = -delta(Omega) o J and its dual vector B.
void lee_form(const Connection& conn, const Endo4& omega, const Endo4& j,
              std::array<double, 4>& theta, Vec4& b);

/// dtheta(E_i,E_j) = -theta([E_i,E_j]) for constant frame components.
Endo4 d_theta(const FrameManifold& m, const std::array<double, 4>& theta);
bool is_one_one(const Endo4& dtheta, const Endo4& j, double tol = kDefaultTol);

ThreeForm d_omega(const FrameManifold& m, const Endo4& omega);

StructureClass classify_structure(const std::array<Endo4, 4>& nabla_j,
                                  const Nijenhuis& n, const ThreeForm& d_om,
                                  double tol = kDefaultTol);

/// Full pipeline for the J-derived tensors.
HermitianData compute_hermitian(const FrameManifold& m, const Connection& conn,
                                const Endo4& j, double tol = kDefaultTol);

/// Max residual of rho - rho* = [L(JX,JY) - L(X,Y)]/2 + (s - s*)/4 g over
/// frame pairs. Throws NotIntegrable unless the class is Hermitian or Kahler.
double remark2_check(const HermitianData& h, const Endo4& ricci,
                     const Endo4& star_ricci_m);

}  // namespace twistor
