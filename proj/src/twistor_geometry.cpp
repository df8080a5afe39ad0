#include "twistor/twistor_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace twistor {

TwistorVec TwistorVec::operator+(const TwistorVec& o) const {
  TwistorVec r;
  r.horizontal = horizontal + o.horizontal;
  r.vertical = vertical + o.vertical;
  r.base = base;
  return r;
}

TwistorVec TwistorVec::operator*(double k) const {
  TwistorVec r;
  r.horizontal = horizontal * k;
  r.vertical = vertical * k;
  r.base = base;
  return r;
}

double h_t(const TwistorContext& ctx, const TwistorVec& u,
           const TwistorVec& v) {
  if (biv_norm(u.base - v.base) > ctx.tol * 10 ||
      biv_norm(u.base - ctx.basepoint) > ctx.tol * 10)
    throw BasepointMismatch("twistor vectors live at different basepoints");
  return dot(u.horizontal, v.horizontal) + ctx.t * biv_dot(u.vertical, v.vertical);
}

double h_t_norm(const TwistorContext& ctx, const TwistorVec& u) {
  return std::sqrt(h_t(ctx, u, u));
}

std::array<double, 3> horizontal_lift_coeffs(const Connection& conn,
                                             const SelfDualTriple& s_frame,
                                             const Vec4& x,
                                             const Bivector& sigma) {
  std::array<double, 3> y{};
  for (int j = 0; j < 3; ++j) y[j] = biv_dot(sigma, s_frame[j]);

  std::array<Bivector, 3> ds;  // nabla_X s_j
  for (int j = 0; j < 3; ++j) {
    Bivector b;
    for (int i = 0; i < 4; ++i)
      if (x[i] != 0.0) b += conn.apply_biv(i, s_frame[j]) * x[i];
    ds[j] = b;
  }

  std::array<double, 3> u{};
  for (int k = 0; k < 3; ++k) {
    double s = 0;
    for (int j = 0; j < 3; ++j) s += y[j] * biv_dot(ds[j], s_frame[k]);
    u[k] = -s;
  }
  return u;
}

Bivector second_cov_frakJ(const Connection& conn, const HermitianData& h,
                          int i, int j) {
  Bivector r = conn.apply_biv(i, h.nabla_frakJ[j]);
  for (int k = 0; k < 4; ++k) {
    const double g = conn.gamma[k][i][j];
    if (g != 0.0) r += h.nabla_frakJ[k] * -g;
  }
  return r;
}

Bivector trace_second_cov(const Connection& conn, const HermitianData& h) {
  Bivector r;
  for (int i = 0; i < 4; ++i) r += second_cov_frakJ(conn, h, i, i);
  return r;
}

namespace {

Bivector project_off(const Bivector& a, const Bivector& unit) {
  return a - unit * biv_dot(a, unit);
}

Vec4 horizontal_correction(const TwistorContext& ctx,
                           const CurvatureData& curv, const HermitianData& h,
                           int i) {
  const Bivector jx = cross(h.frakJ, h.nabla_frakJ[i], 1e-6);
  return curvature_endo(curv, jx).apply(basis_vec(i)) * (-ctx.t);
}

}  // namespace

TwistorVec tilde_nabla_frakJ(const TwistorContext& ctx, const Connection& conn,
                             const CurvatureData& curv, const HermitianData& h,
                             int i, int j) {
  TwistorVec r;
  r.base = h.frakJ;
  const Bivector nij = second_cov_frakJ(conn, h, i, j);
  const Bivector nji = second_cov_frakJ(conn, h, j, i);
  r.vertical = (project_off(nij, h.frakJ) + project_off(nji, h.frakJ)) * 0.5;

  const Bivector ci = cross(h.frakJ, h.nabla_frakJ[i], 1e-6);
  const Bivector cj = cross(h.frakJ, h.nabla_frakJ[j], 1e-6);
  const Vec4 hi = curvature_endo(curv, ci).apply(basis_vec(j));
  const Vec4 hj = curvature_endo(curv, cj).apply(basis_vec(i));
  r.horizontal = (hi + hj) * (-0.5 * ctx.t);
  return r;
}

TwistorVec tension(const TwistorContext& ctx, const Connection& conn,
                   const CurvatureData& curv, const HermitianData& h) {
  TwistorVec r;
  r.base = h.frakJ;
  r.vertical = project_off(trace_second_cov(conn, h), h.frakJ);
  for (int i = 0; i < 4; ++i)
    r.horizontal += horizontal_correction(ctx, curv, h, i);
  return r;
}

double normal_residual(const TwistorContext& ctx, const HermitianData& h,
                       const TwistorVec& v) {
  // Tangent span of the imbedded section: u_i = (E_i)^h + nabla_{E_i} frakJ.
  std::array<TwistorVec, 4> u;
  for (int i = 0; i < 4; ++i) {
    u[i].base = h.frakJ;
    u[i].horizontal = basis_vec(i);
    u[i].vertical = h.nabla_frakJ[i];
  }

  double gram[4][5];
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) gram[a][b] = h_t(ctx, u[a], u[b]);
    gram[a][4] = h_t(ctx, v, u[a]);
  }

  // Gaussian elimination with partial pivoting on the 4x4 Gram system.
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int rr = col + 1; rr < 4; ++rr)
      if (std::abs(gram[rr][col]) > std::abs(gram[piv][col])) piv = rr;
    if (std::abs(gram[piv][col]) < 1e-12)
      throw DegenerateSpan("singular Gram matrix in the tangent span");
    if (piv != col)
      for (int cc = 0; cc <= 4; ++cc) std::swap(gram[piv][cc], gram[col][cc]);
    for (int rr = 0; rr < 4; ++rr) {
      if (rr == col) continue;
      const double f = gram[rr][col] / gram[col][col];
      for (int cc = col; cc <= 4; ++cc) gram[rr][cc] -= f * gram[col][cc];
    }
  }

  TwistorVec res = v;
  res.base = h.frakJ;
  for (int a = 0; a < 4; ++a) {
    const double xa = gram[a][4] / gram[a][a];
    res = res + u[a] * (-xa);
  }
  return h_t_norm(ctx, res);
}

}  // namespace twistor
