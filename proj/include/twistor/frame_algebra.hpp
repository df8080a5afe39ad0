#pragma once

// Fixed-dimension linear algebra on tangent vectors and bivectors of an
// oriented Euclidean 4-space: wedge products, the Hodge star, the self-dual
// split, the cross product on self-dual bivectors and the K-endomorphisms.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twistor {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kJacobiTol = 1e-8;

struct OrientationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSelfDual : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tangent vector in the orthonormal frame.
struct Vec4 {
  std::array<double, 4> c{};

  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  Vec4 operator+(const Vec4& o) const;
  Vec4 operator-(const Vec4& o) const;
  Vec4 operator*(double k) const;
  Vec4& operator+=(const Vec4& o);
};

double dot(const Vec4& a, const Vec4& b);
double norm(const Vec4& v);

/// Basis vector E_i (0-based index).
Vec4 basis_vec(int i);

// Bivector components are stored over ordered pairs i<j in the order
// (0,1),(0,2),(0,3),(1,2),(1,3),(2,3). The metric carries the 1/2 factor of
// g(v1^v2, v3^v4) = det[g(v_i,v_j)]/2 explicitly.
struct Bivector {
  std::array<double, 6> c{};

  double operator[](int s) const { return c[static_cast<std::size_t>(s)]; }
  double& operator[](int s) { return c[static_cast<std::size_t>(s)]; }

  Bivector operator+(const Bivector& o) const;
  Bivector operator-(const Bivector& o) const;
  Bivector operator*(double k) const;
  Bivector& operator+=(const Bivector& o);
  Bivector operator-() const;
};

/// Slot of the ordered pair (i,j), i<j, both 0-based.
int pair_slot(int i, int j);

/// Component a^{ij} for arbitrary i != j (antisymmetric read).
double biv_component(const Bivector& a, int i, int j);

/// Sets a^{ij} (+v) and a^{ji} (-v) consistently; requires i != j.
void biv_add(Bivector& a, int i, int j, double v);

/// g(a,b) = (1/2) sum_{i<j} a^{ij} b^{ij}.
double biv_dot(const Bivector& a, const Bivector& b);
double biv_norm(const Bivector& a);

Bivector wedge(const Vec4& x, const Vec4& y);

Bivector hodge_star(const Bivector& a);
Bivector selfdual_part(const Bivector& a);
Bivector antiselfdual_part(const Bivector& a);

/// Oriented orthonormal basis (s1,s2,s3) of the self-dual bivectors.
struct SelfDualTriple {
  Bivector s1, s2, s3;

  const Bivector& operator[](int k) const;
};

/// Builds the triple from a permuted frame. The permutation is 1-based and
/// must be even; odd permutations reverse the orientation and are rejected.
SelfDualTriple selfdual_basis(
    const std::array<int, 4>& frame_permutation = {1, 2, 3, 4});

/// Cross product on the oriented 3-space of self-dual bivectors.
/// Throws NotSelfDual unless both arguments are self-dual to tolerance.
Bivector cross(const Bivector& a, const Bivector& b, double tol = kDefaultTol);

/// 4x4 real matrix acting on Vec4; m[r][c] is the (row, column) entry.
struct Endo4 {
  std::array<std::array<double, 4>, 4> m{};

  static Endo4 identity();

  Vec4 apply(const Vec4& v) const;
  Endo4 compose(const Endo4& o) const;  // this after o
  Endo4 operator+(const Endo4& o) const;
  Endo4 operator-(const Endo4& o) const;
  Endo4 operator*(double k) const;
  Endo4 transpose() const;
  double max_abs() const;
};

/// The skew-symmetric endomorphism K_a with g(K_a X, Y) = 2 g(a, X^Y).
Endo4 K_op(const Bivector& a);

/// Standard metric -Trace(PQ)/2 on skew-symmetric endomorphisms.
double endo_metric_G(const Endo4& p, const Endo4& q);

/// Linear extension of an endomorphism to bivectors:
/// A.(X^Y) = AX ^ Y + X ^ AY.
Bivector endo_on_bivector(const Endo4& a, const Bivector& b);

/// Scale-free zero predicate: |v| < tol * (1 + scale).
bool near_zero(double v, double scale, double tol);

}  // namespace twistor
