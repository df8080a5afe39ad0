#include "twistor/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace twistor {

void FrameManifold::set_bracket(int i, int j, int k, double v) {
  c[k][i][j] = v;
  c[k][j][i] = -v;
}

Vec4 FrameManifold::bracket(const Vec4& u, const Vec4& v) const {
  Vec4 r;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[k] += u[i] * v[j] * c[k][i][j];
  return r;
}

double FrameManifold::jacobi_residual() const {
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int l = j + 1; l < 4; ++l)
        for (int n = 0; n < 4; ++n) {
          double s = 0;
          for (int m = 0; m < 4; ++m)
            s += c[m][i][j] * c[n][m][l] + c[m][j][l] * c[n][m][i] +
                 c[m][l][i] * c[n][m][j];
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

double FrameManifold::max_abs() const {
  double v = 0;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) v = std::max(v, std::abs(c[k][i][j]));
  return v;
}

Endo4 Connection::dir(int i) const {
  Endo4 g;
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) g.m[k][j] = gamma[k][i][j];
  return g;
}

Vec4 Connection::apply(int i, const Vec4& y) const { return dir(i).apply(y); }

Vec4 Connection::apply(const Vec4& x, const Vec4& y) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i)
    if (x[i] != 0.0) r += apply(i, y) * x[i];
  return r;
}

Bivector Connection::apply_biv(int i, const Bivector& b) const {
  return endo_on_bivector(dir(i), b);
}

double Connection::max_abs() const {
  double v = 0;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) v = std::max(v, std::abs(gamma[k][i][j]));
  return v;
}

Connection levi_civita(const FrameManifold& m, double jacobi_tol) {
  const double jr = m.jacobi_residual();
  if (!near_zero(jr, m.max_abs() * m.max_abs(), jacobi_tol))
    throw NotALieAlgebra("structure constants violate the Jacobi identity (" +
                         m.name + ", residual " + std::to_string(jr) + ")");
  Connection conn;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        conn.gamma[k][i][j] =
            0.5 * (m.c[k][i][j] - m.c[i][j][k] + m.c[j][k][i]);
  return conn;
}

Vec4 CurvatureData::curv(int i, int j, int k) const {
  Vec4 v;
  for (int l = 0; l < 4; ++l) v[l] = r[l][i][j][k];
  return v;
}

Vec4 CurvatureData::curv(const Vec4& x, const Vec4& y, const Vec4& z) const {
  Vec4 v;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (x[i] == 0.0 || y[j] == 0.0) continue;
      for (int k = 0; k < 4; ++k) {
        if (z[k] == 0.0) continue;
        const double w = x[i] * y[j] * z[k];
        for (int l = 0; l < 4; ++l) v[l] += w * r[l][i][j][k];
      }
    }
  return v;
}

double CurvatureData::component(int i, int j, int k, int l) const {
  return r[l][i][j][k];
}

double CurvatureData::max_abs() const {
  double v = 0;
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) v = std::max(v, std::abs(r[l][i][j][k]));
  return v;
}

CurvatureData curvature(const FrameManifold& m, const Connection& conn) {
  CurvatureData cd;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        // R(E_i,E_j)E_k = nabla_{[E_i,E_j]}E_k
        //                 - nabla_{E_i}nabla_{E_j}E_k
        //                 + nabla_{E_j}nabla_{E_i}E_k
        Vec4 v;
        for (int q = 0; q < 4; ++q) {
          if (m.c[q][i][j] != 0.0) v += conn.apply(q, basis_vec(k)) * m.c[q][i][j];
        }
        v = v - conn.apply(i, conn.apply(j, basis_vec(k)));
        v += conn.apply(j, conn.apply(i, basis_vec(k)));
        for (int l = 0; l < 4; ++l) cd.r[l][i][j][k] = v[l];
      }

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0;
      for (int i = 0; i < 4; ++i) s += cd.r[i][a][i][b];
      cd.ricci.m[a][b] = s;
    }
  cd.scalar = trace(cd.ricci);
  return cd;
}

Endo4 curvature_endo(const CurvatureData& r, const Bivector& a) {
  Endo4 e;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double w = biv_component(a, i, j);
      if (w == 0.0) continue;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) e.m[l][k] += w * r.r[l][i][j][k];
    }
  return e;
}

CurvatureOperator curvature_operator(const CurvatureData& r) {
  CurvatureOperator op;
  static constexpr int pi[6] = {0, 0, 0, 1, 1, 2};
  static constexpr int pj[6] = {1, 2, 3, 2, 3, 3};
  // (Rop e_{ij})^{kl} = 2 R_{ijkl} so that the bivector metric pairing of
  // Rop(e_{ij}) with e_{kl} reproduces g(R(E_i,E_j)E_k, E_l).
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      op.m[q][p] = 2.0 * r.r[pj[q]][pi[p]][pj[p]][pi[q]];
  return op;
}

Bivector CurvatureOperator::apply(const Bivector& a) const {
  Bivector r;
  for (int q = 0; q < 6; ++q)
    for (int p = 0; p < 6; ++p) r[q] += m[q][p] * a[p];
  return r;
}

double CurvatureOperator::pairing(const Bivector& a, const Bivector& b) const {
  return biv_dot(apply(a), b);
}

Endo4 star_ricci(const CurvatureData& r, const Endo4& j) {
  Endo4 rs;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0;
      const Vec4 jy = j.apply(basis_vec(b));
      for (int i = 0; i < 4; ++i) {
        const Vec4 jei = j.apply(basis_vec(i));
        s += r.curv(jei, basis_vec(a), jy)[i];
      }
      rs.m[a][b] = s;
    }
  return rs;
}

double trace(const Endo4& m) {
  return m.m[0][0] + m.m[1][1] + m.m[2][2] + m.m[3][3];
}

}  // namespace twistor
