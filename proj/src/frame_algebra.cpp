#include "twistor/frame_algebra.hpp"

#include <algorithm>

namespace twistor {

Vec4 Vec4::operator+(const Vec4& o) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = (*this)[i] + o[i];
  return r;
}

Vec4 Vec4::operator-(const Vec4& o) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = (*this)[i] - o[i];
  return r;
}

Vec4 Vec4::operator*(double k) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = (*this)[i] * k;
  return r;
}

Vec4& Vec4::operator+=(const Vec4& o) {
  for (int i = 0; i < 4; ++i) (*this)[i] += o[i];
  return *this;
}

double dot(const Vec4& a, const Vec4& b) {
  double s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec4& v) { return std::sqrt(dot(v, v)); }

Vec4 basis_vec(int i) {
  Vec4 v;
  v[i] = 1.0;
  return v;
}

Bivector Bivector::operator+(const Bivector& o) const {
  Bivector r;
  for (int s = 0; s < 6; ++s) r[s] = (*this)[s] + o[s];
  return r;
}

Bivector Bivector::operator-(const Bivector& o) const {
  Bivector r;
  for (int s = 0; s < 6; ++s) r[s] = (*this)[s] - o[s];
  return r;
}

Bivector Bivector::operator*(double k) const {
  Bivector r;
  for (int s = 0; s < 6; ++s) r[s] = (*this)[s] * k;
  return r;
}

Bivector& Bivector::operator+=(const Bivector& o) {
  for (int s = 0; s < 6; ++s) (*this)[s] += o[s];
  return *this;
}

Bivector Bivector::operator-() const { return (*this) * -1.0; }

namespace {
constexpr int kPairI[6] = {0, 0, 0, 1, 1, 2};
constexpr int kPairJ[6] = {1, 2, 3, 2, 3, 3};
}  // namespace

int pair_slot(int i, int j) {
  static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                      {0, -1, 3, 4},
                                      {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  return table[i][j];
}

double biv_component(const Bivector& a, int i, int j) {
  if (i == j) return 0.0;
  const double v = a[pair_slot(i, j)];
  return i < j ? v : -v;
}

void biv_add(Bivector& a, int i, int j, double v) {
  a[pair_slot(i, j)] += (i < j) ? v : -v;
}

double biv_dot(const Bivector& a, const Bivector& b) {
  double s = 0;
  for (int k = 0; k < 6; ++k) s += a[k] * b[k];
  return 0.5 * s;
}

double biv_norm(const Bivector& a) { return std::sqrt(biv_dot(a, a)); }

Bivector wedge(const Vec4& x, const Vec4& y) {
  Bivector r;
  for (int s = 0; s < 6; ++s) {
    const int i = kPairI[s], j = kPairJ[s];
    r[s] = x[i] * y[j] - x[j] * y[i];
  }
  return r;
}

Bivector hodge_star(const Bivector& a) {
  // *(e12)=e34, *(e13)=-e24, *(e14)=e23 and the involutive partners.
  Bivector r;
  r[pair_slot(0, 1)] = a[pair_slot(2, 3)];
  r[pair_slot(0, 2)] = -a[pair_slot(1, 3)];
  r[pair_slot(0, 3)] = a[pair_slot(1, 2)];
  r[pair_slot(1, 2)] = a[pair_slot(0, 3)];
  r[pair_slot(1, 3)] = -a[pair_slot(0, 2)];
  r[pair_slot(2, 3)] = a[pair_slot(0, 1)];
  return r;
}

Bivector selfdual_part(const Bivector& a) {
  return (a + hodge_star(a)) * 0.5;
}

Bivector antiselfdual_part(const Bivector& a) {
  return (a - hodge_star(a)) * 0.5;
}

const Bivector& SelfDualTriple::operator[](int k) const {
  switch (k) {
    case 0:
      return s1;
    case 1:
      return s2;
    default:
      return s3;
  }
}

namespace {
int permutation_parity(const std::array<int, 4>& p) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2;
}
}  // namespace

SelfDualTriple selfdual_basis(const std::array<int, 4>& frame_permutation) {
  std::array<bool, 4> seen{};
  for (int v : frame_permutation) {
    if (v < 1 || v > 4 || seen[v - 1])
      throw OrientationError("frame permutation is not a permutation of 1..4");
    seen[v - 1] = true;
  }
  if (permutation_parity(frame_permutation) != 0)
    throw OrientationError("odd frame permutation reverses the orientation");

  std::array<Vec4, 4> f;
  for (int a = 0; a < 4; ++a) f[a] = basis_vec(frame_permutation[a] - 1);

  SelfDualTriple t;
  t.s1 = wedge(f[0], f[1]) + wedge(f[2], f[3]);
  t.s2 = wedge(f[0], f[2]) + wedge(f[3], f[1]);
  t.s3 = wedge(f[0], f[3]) + wedge(f[1], f[2]);
  return t;
}

Bivector cross(const Bivector& a, const Bivector& b, double tol) {
  const double scale = std::max(biv_norm(a), biv_norm(b));
  if (!near_zero(biv_norm(hodge_star(a) - a), scale, tol) ||
      !near_zero(biv_norm(hodge_star(b) - b), scale, tol))
    throw NotSelfDual("cross requires self-dual arguments");

  static const SelfDualTriple s = selfdual_basis();
  std::array<double, 3> u, v;
  for (int k = 0; k < 3; ++k) {
    u[k] = biv_dot(a, s[k]);
    v[k] = biv_dot(b, s[k]);
  }
  const std::array<double, 3> w = {u[1] * v[2] - u[2] * v[1],
                                   u[2] * v[0] - u[0] * v[2],
                                   u[0] * v[1] - u[1] * v[0]};
  Bivector r;
  for (int k = 0; k < 3; ++k) r += s[k] * w[k];
  return r;
}

Endo4 Endo4::identity() {
  Endo4 e;
  for (int i = 0; i < 4; ++i) e.m[i][i] = 1.0;
  return e;
}

Vec4 Endo4::apply(const Vec4& v) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return r;
}

Endo4 Endo4::compose(const Endo4& o) const {
  Endo4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0;
      for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

Endo4 Endo4::operator+(const Endo4& o) const {
  Endo4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
  return r;
}

Endo4 Endo4::operator-(const Endo4& o) const {
  Endo4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
  return r;
}

Endo4 Endo4::operator*(double k) const {
  Endo4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] * k;
  return r;
}

Endo4 Endo4::transpose() const {
  Endo4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
  return r;
}

double Endo4::max_abs() const {
  double v = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v = std::max(v, std::abs(m[i][j]));
  return v;
}

Endo4 K_op(const Bivector& a) {
  // g(K_a E_i, E_j) = 2 g(a, E_i ^ E_j) = a^{ij}.
  Endo4 k;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) k.m[j][i] = biv_component(a, i, j);
  return k;
}

double endo_metric_G(const Endo4& p, const Endo4& q) {
  double s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += p.m[i][j] * q.m[j][i];
  return -0.5 * s;
}

Bivector endo_on_bivector(const Endo4& a, const Bivector& b) {
  Bivector r;
  for (int s = 0; s < 6; ++s) {
    if (b[s] == 0.0) continue;
    const int i = kPairI[s], j = kPairJ[s];
    const Vec4 ei = basis_vec(i), ej = basis_vec(j);
    r += (wedge(a.apply(ei), ej) + wedge(ei, a.apply(ej))) * b[s];
  }
  return r;
}

bool near_zero(double v, double scale, double tol) {
  return std::abs(v) < tol * (1.0 + std::abs(scale));
}

}  // namespace twistor
