#include "twistor/hermitian.hpp"

#include <algorithm>
#include <cmath>

namespace twistor {

const char* to_string(StructureClass c) {
  switch (c) {
    case StructureClass::Kahler:
      return "Kahler";
    case StructureClass::Hermitian:
      return "Hermitian";
    case StructureClass::AlmostKahler:
      return "AlmostKahler";
    default:
      return "Generic";
  }
}

Vec4 Nijenhuis::of_pair(int i, int j) const {
  Vec4 r;
  for (int k = 0; k < 4; ++k) r[k] = n[k][i][j];
  return r;
}

Vec4 Nijenhuis::of_bivector(const Bivector& a) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double w = biv_component(a, i, j);
      if (w != 0.0) r += of_pair(i, j) * w;
    }
  return r;
}

double Nijenhuis::max_abs() const {
  double v = 0;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) v = std::max(v, std::abs(n[k][i][j]));
  return v;
}

double ThreeForm::eval(const Vec4& x, const Vec4& y, const Vec4& z) const {
  double s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) s += x[i] * y[j] * z[k] * v[i][j][k];
  return s;
}

double ThreeForm::max_abs() const {
  double m = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(v[i][j][k]));
  return m;
}

HermitianData validate_J(const FrameManifold& m, const Endo4& j, double tol) {
  (void)m;
  const double scale = std::max(1.0, j.max_abs());
  const Endo4 j2 = j.compose(j);
  const Endo4 id = Endo4::identity();
  if ((j2 + id).max_abs() > tol * (1 + scale * scale))
    throw NotAComplexStructure("J^2 != -Id");
  if ((j.transpose().compose(j) - id).max_abs() > tol * (1 + scale * scale))
    throw NotOrthogonal("J is not g-orthogonal");

  HermitianData h;
  h.J = j;
  for (int a = 0; a < 4; ++a) {
    const Vec4 je = j.apply(basis_vec(a));
    for (int b = 0; b < 4; ++b) h.Omega.m[a][b] = je[b];
  }
  // frakJ^{ij} = g(J E_i, E_j)
  for (int i = 0; i < 4; ++i)
    for (int j2i = i + 1; j2i < 4; ++j2i)
      h.frakJ[pair_slot(i, j2i)] = h.Omega.m[i][j2i];

  if (!near_zero(biv_norm(hodge_star(h.frakJ) - h.frakJ), 1.0, tol))
    throw WrongOrientation(
        "the twistor representative of J is not self-dual; the frame "
        "orientation is incompatible with J");
  if (std::abs(biv_norm(h.frakJ) - 1.0) > tol)
    throw NotAComplexStructure("twistor representative is not unit");
  return h;
}

std::array<Endo4, 4> nabla_J(const Connection& conn, const Endo4& j) {
  std::array<Endo4, 4> r;
  for (int i = 0; i < 4; ++i) {
    const Endo4 g = conn.dir(i);
    r[i] = g.compose(j) - j.compose(g);
  }
  return r;
}

std::array<Bivector, 4> nabla_frakJ(const Connection& conn,
                                    const Bivector& frak_j) {
  std::array<Bivector, 4> r;
  for (int i = 0; i < 4; ++i) r[i] = conn.apply_biv(i, frak_j);
  return r;
}

Nijenhuis nijenhuis(const FrameManifold& m, const Endo4& j) {
  Nijenhuis n;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Vec4 ea = basis_vec(a), eb = basis_vec(b);
      const Vec4 ja = j.apply(ea), jb = j.apply(eb);
      Vec4 v = m.bracket(ea, eb) * -1.0;
      v += m.bracket(ja, jb);
      v += j.apply(m.bracket(ea, jb)) * -1.0;
      v += j.apply(m.bracket(ja, eb)) * -1.0;
      for (int k = 0; k < 4; ++k) n.n[k][a][b] = v[k];
    }
  return n;
}

void lee_form(const Connection& conn, const Endo4& omega, const Endo4& j,
              std::array<double, 4>& theta, Vec4& b) {
  // (nabla_{E_i} Omega)(E_j, E_k) = g((nabla_{E_i} J) E_j, E_k)
  const Endo4 jm = j;
  std::array<Endo4, 4> nj = nabla_J(conn, jm);
  (void)omega;
  std::array<double, 4> delta_omega{};
  for (int x = 0; x < 4; ++x) {
    double s = 0;
    for (int i = 0; i < 4; ++i) s += nj[i].apply(basis_vec(i))[x];
    delta_omega[x] = -s;
  }
  for (int k = 0; k < 4; ++k) {
    const Vec4 jek = j.apply(basis_vec(k));
    double s = 0;
    for (int x = 0; x < 4; ++x) s += delta_omega[x] * jek[x];
    theta[k] = -s;
    b[k] = theta[k];
  }
}

Endo4 d_theta(const FrameManifold& m, const std::array<double, 4>& theta) {
  Endo4 d;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0;
      for (int k = 0; k < 4; ++k) s += m.c[k][i][j] * theta[k];
      d.m[i][j] = -s;
    }
  return d;
}

bool is_one_one(const Endo4& dtheta, const Endo4& j, double tol) {
  double worst = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Vec4 ja = j.apply(basis_vec(a)), jb = j.apply(basis_vec(b));
      double tw = 0;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) tw += ja[i] * jb[k] * dtheta.m[i][k];
      worst = std::max(worst, std::abs(tw - dtheta.m[a][b]));
    }
  return near_zero(worst, dtheta.max_abs(), tol);
}

ThreeForm d_omega(const FrameManifold& m, const Endo4& omega) {
  auto om = [&](const Vec4& x, int k) {
    double s = 0;
    for (int a = 0; a < 4; ++a) s += x[a] * omega.m[a][k];
    return s;
  };
  ThreeForm d;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const Vec4 bij = m.bracket(basis_vec(i), basis_vec(j));
        const Vec4 bjk = m.bracket(basis_vec(j), basis_vec(k));
        const Vec4 bki = m.bracket(basis_vec(k), basis_vec(i));
        d.v[i][j][k] = -om(bij, k) - om(bjk, i) - om(bki, j);
      }
  return d;
}

StructureClass classify_structure(const std::array<Endo4, 4>& nabla_j,
                                  const Nijenhuis& n, const ThreeForm& d_om,
                                  double tol) {
  double nj_max = 0;
  for (const auto& e : nabla_j) nj_max = std::max(nj_max, e.max_abs());
  const double scale = std::max({nj_max, n.max_abs(), d_om.max_abs()});
  if (near_zero(nj_max, scale, tol)) return StructureClass::Kahler;
  if (near_zero(n.max_abs(), scale, tol)) return StructureClass::Hermitian;
  if (near_zero(d_om.max_abs(), scale, tol)) return StructureClass::AlmostKahler;
  return StructureClass::Generic;
}

HermitianData compute_hermitian(const FrameManifold& m, const Connection& conn,
                                const Endo4& j, double tol) {
  HermitianData h = validate_J(m, j, tol);
  h.nablaJ = nabla_J(conn, j);
  h.nabla_frakJ = nabla_frakJ(conn, h.frakJ);
  h.N = nijenhuis(m, j);
  lee_form(conn, h.Omega, j, h.theta, h.B);
  h.dtheta = d_theta(m, h.theta);
  h.dtheta_one_one = is_one_one(h.dtheta, j, tol);
  h.dOmega = d_omega(m, h.Omega);

  // L(E_i,E_j) = (nabla_{E_i} theta)(E_j) + theta_i theta_j / 2, where
  // (nabla_{E_i} theta)(E_j) = -theta(nabla_{E_i} E_j) for constant theta.
  for (int i = 0; i < 4; ++i)
    for (int jj = 0; jj < 4; ++jj) {
      double s = 0;
      for (int k = 0; k < 4; ++k) s += conn.gamma[k][i][jj] * h.theta[k];
      h.L.m[i][jj] = -s + 0.5 * h.theta[i] * h.theta[jj];
    }

  h.cls = classify_structure(h.nablaJ, h.N, h.dOmega, tol);
  h.integrable = (h.cls == StructureClass::Kahler ||
                  h.cls == StructureClass::Hermitian);
  h.symplectic = (h.cls == StructureClass::Kahler ||
                  h.cls == StructureClass::AlmostKahler);
  return h;
}

double remark2_check(const HermitianData& h, const Endo4& ricci,
                     const Endo4& star_ricci_m) {
  if (!h.integrable)
    throw NotIntegrable("the Ricci comparison identity needs integrable J");
  const double s = trace(ricci);
  const double s_star = trace(star_ricci_m);
  double worst = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Vec4 ja = h.J.apply(basis_vec(a)), jb = h.J.apply(basis_vec(b));
      double ljj = 0;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) ljj += ja[i] * jb[k] * h.L.m[i][k];
      const double lhs = ricci.m[a][b] - star_ricci_m.m[a][b];
      const double rhs = 0.5 * (ljj - h.L.m[a][b]) +
                         0.25 * (s - s_star) * (a == b ? 1.0 : 0.0);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  return worst;
}

}  // namespace twistor
