#include "twistor/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twistor {

namespace {

Vec4 normalize(const Vec4& v) { return v * (1.0 / norm(v)); }

Condition make_cond(std::string name, double value, double scale, double tol) {
  Condition c;
  c.name = std::move(name);
  c.value = value;
  c.threshold = tol * (1.0 + std::abs(scale));
  c.pass = value < c.threshold;
  return c;
}

double rho_defect_on(const Endo4& ricci, const Endo4& star, const Vec4& x,
                     const Vec4& b) {
  double lhs = 0, rhs = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      lhs += x[i] * b[j] * ricci.m[i][j];
      rhs += x[i] * b[j] * star.m[i][j];
    }
  return std::abs(lhs - rhs);
}

}  // namespace

std::array<Vec4, 4> adapted_frame(const Endo4& j, double tol) {
  std::array<Vec4, 4> f;
  f[0] = basis_vec(0);
  f[1] = j.apply(f[0]);

  // First standard basis vector with a substantial component orthogonal to
  // span{F1, F2}.
  Vec4 cand;
  bool found = false;
  for (int i = 0; i < 4 && !found; ++i) {
    Vec4 v = basis_vec(i);
    v = v - f[0] * dot(v, f[0]) - f[1] * dot(v, f[1]);
    if (norm(v) > 0.5) {
      cand = v;
      found = true;
    }
  }
  if (!found) throw std::logic_error("adapted frame construction failed");
  f[2] = normalize(cand);
  f[3] = j.apply(f[2]);

  // Sanity: the frame must be orthonormal.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double d = dot(f[a], f[b]) - (a == b ? 1.0 : 0.0);
      if (std::abs(d) > 100 * tol)
        throw std::logic_error("adapted frame is not orthonormal");
    }
  return f;
}

Analysis analyze(const FrameManifold& m, const Endo4& j, double t,
                 double tol) {
  Analysis a;
  a.manifold = m;
  a.conn = levi_civita(m);
  a.curv = curvature(m, a.conn);
  a.herm = compute_hermitian(m, a.conn, j, tol);
  a.star_ricci_m = star_ricci(a.curv, j);
  a.star_scalar = trace(a.star_ricci_m);

  a.ctx.t = t;
  a.ctx.tol = tol;
  a.ctx.basepoint = a.herm.frakJ;

  a.adapted = adapted_frame(j, tol);
  const Bivector s1a = wedge(a.adapted[0], a.adapted[1]) +
                       wedge(a.adapted[2], a.adapted[3]);
  const Bivector s2a = wedge(a.adapted[0], a.adapted[2]) +
                       wedge(a.adapted[3], a.adapted[1]);
  const Bivector s3a = wedge(a.adapted[0], a.adapted[3]) +
                       wedge(a.adapted[1], a.adapted[2]);
  if (biv_norm(s1a - a.herm.frakJ) > 1e-6)
    throw std::logic_error("adapted frame does not reproduce frakJ");

  // N(Lambda^2_0) span.
  const Vec4 n2 = a.herm.N.of_bivector(s2a);
  const Vec4 n3 = a.herm.N.of_bivector(s3a);
  const double nscale = a.herm.N.max_abs();
  const bool z2 = near_zero(norm(n2), nscale, tol);
  const bool z3 = near_zero(norm(n3), nscale, tol);
  if (!z2) a.nspace.basis.push_back(normalize(n2));
  if (!z3) {
    Vec4 w = n3;
    for (const Vec4& u : a.nspace.basis) w = w - u * dot(w, u);
    if (!near_zero(norm(w), nscale, tol))
      a.nspace.basis.push_back(normalize(w));
  }
  a.nspace.rank_warning = (a.nspace.dim() == 1);

  // Direct route: tension field, normal residual, second fundamental form.
  a.tension_field = tension(a.ctx, a.conn, a.curv, a.herm);
  a.tension_vertical_s2 = biv_dot(a.tension_field.vertical, s2a);
  a.tension_vertical_s3 = biv_dot(a.tension_field.vertical, s3a);
  a.normal_res = normal_residual(a.ctx, a.herm, a.tension_field);
  a.max_second_fund = 0;
  for (int i = 0; i < 4; ++i)
    for (int k = i; k < 4; ++k) {
      const TwistorVec sf =
          tilde_nabla_frakJ(a.ctx, a.conn, a.curv, a.herm, i, k);
      a.max_second_fund = std::max(a.max_second_fund, h_t_norm(a.ctx, sf));
    }

  const double dscale =
      std::max({1.0, a.curv.max_abs() * (1.0 + t), a.conn.max_abs()});
  const bool sec_direct =
      near_zero(biv_norm(a.tension_field.vertical), dscale, tol);
  const bool map_direct =
      sec_direct && near_zero(norm(a.tension_field.horizontal), dscale, tol);
  const bool min_direct = near_zero(a.normal_res, dscale, tol);
  const bool geo_direct = near_zero(a.max_second_fund, dscale, tol);

  Verdict v;
  v.totally_geodesic = geo_direct;
  const Endo4& rho = a.curv.ricci;
  const Endo4& rhos = a.star_ricci_m;
  const double rscale = std::max(rho.max_abs(), rhos.max_abs());

  switch (a.herm.cls) {
    case StructureClass::Kahler: {
      v.method = "theorem";
      double njm = 0;
      for (const auto& e : a.herm.nablaJ) njm = std::max(njm, e.max_abs());
      v.conditions.push_back(make_cond("nabla_J", njm, a.conn.max_abs(), tol));
      v.harmonic_section = v.harmonic_map = v.minimal = true;
      v.totally_geodesic = true;
      break;
    }
    case StructureClass::Hermitian: {
      v.method = "theorem";
      double oo = 0;
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
          const Vec4 jp = j.apply(basis_vec(p)), jq = j.apply(basis_vec(q));
          double tw = 0;
          for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
              tw += jp[i] * jq[k] * a.herm.dtheta.m[i][k];
          oo = std::max(oo, std::abs(tw - a.herm.dtheta.m[p][q]));
        }
      const Condition c_oo =
          make_cond("dtheta_one_one_defect", oo, a.herm.dtheta.max_abs(), tol);
      v.conditions.push_back(c_oo);

      double rb = 0;
      for (int k = 0; k < 4; ++k)
        rb = std::max(rb, rho_defect_on(rho, rhos, basis_vec(k), a.herm.B));
      const Condition c_rb =
          make_cond("rho_minus_rhostar_on_B", rb, rscale, tol);
      v.conditions.push_back(c_rb);

      v.harmonic_section = c_oo.pass;
      v.harmonic_map = c_oo.pass && c_rb.pass;

      if (near_zero(norm(a.herm.B), a.conn.max_abs(), tol)) {
        // B = 0: minimality reduces to the (1,1) condition.
        v.minimal = c_oo.pass;
      } else {
        // Orthonormal basis of the complement of {B, JB}.
        const Vec4 bu = normalize(a.herm.B);
        const Vec4 jbu = j.apply(bu);
        std::vector<Vec4> comp;
        for (int i = 0; i < 4 && comp.size() < 2; ++i) {
          Vec4 w = basis_vec(i);
          w = w - bu * dot(w, bu) - jbu * dot(w, jbu);
          for (const Vec4& u : comp) w = w - u * dot(w, u);
          if (norm(w) > 0.5) comp.push_back(normalize(w));
        }
        double rp = 0;
        for (const Vec4& x : comp)
          rp = std::max(rp, rho_defect_on(rho, rhos, x, a.herm.B));
        const Condition c_rp =
            make_cond("rho_defect_perp_B", rp, rscale, tol);
        v.conditions.push_back(c_rp);
        v.minimal = c_oo.pass && c_rp.pass;
      }
      break;
    }
    case StructureClass::AlmostKahler: {
      v.method = "theorem";
      double asym = 0;
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          asym = std::max(asym, std::abs(rhos.m[p][q] - rhos.m[q][p]));
      const Condition c_sym =
          make_cond("rhostar_asymmetry", asym, rscale, tol);
      v.conditions.push_back(c_sym);

      const Vec4 tr = curvature_endo(a.curv, s2a).apply(n2) +
                      curvature_endo(a.curv, s3a).apply(n3);
      const double tr_scale = a.curv.max_abs() * (1.0 + nscale);
      const Condition c_tr =
          make_cond("trace_RN_norm", norm(tr), tr_scale, tol);
      v.conditions.push_back(c_tr);

      v.harmonic_section = c_sym.pass;
      v.harmonic_map = c_sym.pass && c_tr.pass;

      if (a.nspace.dim() == 0) {
        v.minimal = c_sym.pass && c_tr.pass;
      } else {
        Vec4 resid = tr;
        for (const Vec4& u : a.nspace.basis) resid = resid - u * dot(tr, u);
        const Condition c_ns = make_cond("trace_RN_nspace_residual",
                                         norm(resid), tr_scale, tol);
        v.conditions.push_back(c_ns);
        v.minimal = c_sym.pass && c_ns.pass;
      }
      break;
    }
    case StructureClass::Generic: {
      v.method = "direct";
      v.conditions.push_back(make_cond(
          "tension_vertical", biv_norm(a.tension_field.vertical), dscale, tol));
      v.conditions.push_back(make_cond(
          "tension_horizontal", norm(a.tension_field.horizontal), dscale, tol));
      v.conditions.push_back(
          make_cond("normal_residual", a.normal_res, dscale, tol));
      v.harmonic_section = sec_direct;
      v.harmonic_map = map_direct;
      v.minimal = min_direct;
      break;
    }
  }

  v.conditions.push_back(
      make_cond("second_fundamental_form", a.max_second_fund, dscale, tol));

  if (v.method == "theorem") {
    v.cross_check = (v.harmonic_section == sec_direct) &&
                    (v.harmonic_map == map_direct) &&
                    (v.minimal == min_direct) &&
                    (v.totally_geodesic == geo_direct);
  } else {
    v.cross_check = true;
  }
  a.verdict = v;
  return a;
}

bool j_invariant_ricci_shortcut(const Analysis& a) {
  if (!a.herm.integrable) return false;
  const Endo4& rho = a.curv.ricci;
  double defect = 0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      const Vec4 jp = a.herm.J.apply(basis_vec(p));
      const Vec4 jq = a.herm.J.apply(basis_vec(q));
      double tw = 0;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) tw += jp[i] * jq[k] * rho.m[i][k];
      defect = std::max(defect, std::abs(tw - rho.m[p][q]));
    }
  const bool applies = near_zero(defect, rho.max_abs(), a.ctx.tol);
  if (applies && !(a.verdict.minimal && a.verdict.harmonic_section))
    throw std::logic_error(
        "J-invariant Ricci shortcut contradicts the computed verdict");
  return applies;
}

}  // namespace twistor
