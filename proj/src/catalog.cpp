#include "twistor/catalog.hpp"

#include <cmath>

namespace twistor {

namespace {

void set_J_pair(Endo4& j, int a, int b, double eps) {
  // J E_a = eps E_b
  j.m[b][a] = eps;
  j.m[a][b] = -eps;
}

void require_sign(int eps, const char* what) {
  if (eps != 1 && eps != -1)
    throw BadParameter(std::string(what) + " must be +1 or -1");
}

}  // namespace

int Preset::slot(const std::string& label) const {
  for (int i = 0; i < 4; ++i)
    if (labels[static_cast<std::size_t>(i)] == label) return i;
  throw BadParameter("no frame vector labelled " + label);
}

Preset kodaira_hermitian(int eps1, int eps2) {
  require_sign(eps1, "eps1");
  require_sign(eps2, "eps2");
  Preset p;
  p.name = "kodaira-hermitian";

  // For eps1*eps2 = -1 the twistor representative of J is self-dual only in
  // the reversed orientation, so the preset frame lists A4 before A3.
  const bool flip = (eps1 * eps2 == -1);
  int sl[4] = {0, 1, 2, 3};
  if (flip) {
    sl[2] = 3;
    sl[3] = 2;
  }
  p.labels = {"A1", "A2", "A3", "A4"};
  if (flip) p.labels = {"A1", "A2", "A4", "A3"};

  p.manifold.name = p.name;
  // [A1, A2] = -2 A4, all other brackets zero.
  p.manifold.set_bracket(sl[0], sl[1], sl[3], -2.0);

  set_J_pair(p.J, sl[0], sl[1], eps1);  // J A1 = eps1 A2
  set_J_pair(p.J, sl[2], sl[3], eps2);  // J A3 = eps2 A4

  p.expected_connection = {
      {sl[0], sl[1], sl[3], -1.0}, {sl[1], sl[0], sl[3], 1.0},
      {sl[0], sl[3], sl[1], 1.0},  {sl[3], sl[0], sl[1], 1.0},
      {sl[1], sl[3], sl[0], -1.0}, {sl[3], sl[1], sl[0], -1.0}};
  p.connection_complete = true;

  p.expected_curvature = {{sl[0], sl[1], sl[0], sl[1], -3.0},
                          {sl[0], sl[3], sl[0], sl[3], 1.0},
                          {sl[1], sl[3], sl[1], sl[3], 1.0}};
  p.curvature_complete = true;

  p.expected_ricci = {
      {sl[0], sl[0], -2.0}, {sl[1], sl[1], -2.0}, {sl[3], sl[3], 2.0}};
  p.ricci_complete = true;
  p.expected_star_ricci = {{sl[0], sl[0], -3.0}, {sl[1], sl[1], -3.0}};
  p.star_ricci_complete = true;

  Vec4 b;
  b[sl[2]] = -2.0 * eps1 * eps2;
  p.expected_B = b;
  p.expected_class = StructureClass::Hermitian;
  p.expected_verdicts = {{true, true, true, false}};
  return p;
}

Preset kodaira_almost_kahler(int eps1, int eps2, double phi) {
  require_sign(eps1, "eps1");
  require_sign(eps2, "eps2");
  Preset p;
  p.name = "kodaira-almost-kahler";
  p.labels = {"E1", "E2", "E3", "E4"};
  p.manifold.name = p.name;

  const double K = eps1 * eps2 * std::cos(phi);
  const double S = eps2 * std::sin(phi);
  // [E1, E4] = -2K E2 - 2S E3.
  p.manifold.set_bracket(0, 3, 1, -2.0 * K);
  p.manifold.set_bracket(0, 3, 2, -2.0 * S);

  set_J_pair(p.J, 0, 1, 1);
  set_J_pair(p.J, 2, 3, 1);

  p.expected_connection = {
      {0, 1, 3, K},  {0, 2, 3, S},  {0, 3, 1, -K}, {0, 3, 2, -S},
      {1, 0, 3, K},  {1, 3, 0, -K}, {2, 0, 3, S},  {2, 3, 0, -S},
      {3, 0, 1, K},  {3, 0, 2, S},  {3, 1, 0, -K}, {3, 2, 0, -S}};
  p.connection_complete = true;

  p.expected_curvature = {
      {0, 1, 0, 1, K * K}, {0, 1, 0, 2, K * S},  {0, 2, 0, 2, S * S},
      {0, 3, 0, 3, -3.0},  {1, 3, 1, 3, K * K},  {1, 3, 2, 3, K * S},
      {2, 3, 2, 3, S * S}};
  p.curvature_complete = true;

  p.expected_ricci = {{0, 0, -2.0},
                      {1, 1, 2.0 * K * K},
                      {2, 2, 2.0 * S * S},
                      {3, 3, -2.0},
                      {1, 2, 2.0 * K * S},
                      {2, 1, 2.0 * K * S}};
  p.ricci_complete = true;
  p.expected_star_ricci = {{0, 0, K * K}, {1, 1, K * K}, {2, 2, S * S},
                           {3, 3, S * S}, {0, 3, -K * S}, {3, 0, -K * S},
                           {1, 2, K * S}, {2, 1, K * S}};
  p.star_ricci_complete = true;

  Vec4 n2, n3;
  n2[0] = -4.0 * K;
  n2[3] = 4.0 * S;
  n3[1] = 4.0 * K;
  n3[2] = 4.0 * S;
  p.expected_N_s2 = n2;
  p.expected_N_s3 = n3;
  p.expected_B = Vec4{};
  p.expected_class = StructureClass::AlmostKahler;
  p.expected_verdicts = {{true, true, true, false}};
  return p;
}

Preset lie_group_ak(double s, double t) {
  if (t == 0.0) throw BadParameter("parameter t must be non-zero");
  Preset p;
  p.name = "lie-group-almost-kahler";
  p.labels = {"E1", "E2", "E3", "E4"};
  p.manifold.name = p.name;

  const double q = (s * s - t * t) / (2.0 * t);
  const double lam = (s * s + t * t) / (2.0 * t);
  const double mu = lam * lam;

  p.manifold.set_bracket(0, 2, 0, s);
  p.manifold.set_bracket(0, 2, 1, s * s / t);
  p.manifold.set_bracket(0, 3, 0, q);
  p.manifold.set_bracket(0, 3, 1, -s);
  p.manifold.set_bracket(1, 2, 0, -t);
  p.manifold.set_bracket(1, 2, 1, -s);
  p.manifold.set_bracket(1, 3, 0, -s);
  p.manifold.set_bracket(1, 3, 1, -q);
  p.manifold.set_bracket(2, 3, 2, -2.0 * lam);

  set_J_pair(p.J, 0, 1, 1);
  set_J_pair(p.J, 2, 3, 1);

  p.expected_connection = {
      {0, 0, 2, -s},   {0, 0, 3, -q},  {0, 1, 2, -q},  {0, 1, 3, s},
      {0, 2, 0, s},    {0, 2, 1, q},   {0, 3, 0, q},   {0, 3, 1, -s},
      {1, 0, 2, -q},   {1, 0, 3, s},   {1, 1, 2, s},   {1, 1, 3, q},
      {1, 2, 0, q},    {1, 2, 1, -s},  {1, 3, 0, -s},  {1, 3, 1, -q},
      {2, 0, 1, -lam}, {2, 1, 0, lam}, {2, 2, 3, 2.0 * lam},
      {2, 3, 2, -2.0 * lam}};
  p.connection_complete = true;

  p.expected_curvature = {
      {0, 1, 0, 1, 2.0 * mu}, {0, 1, 2, 3, 2.0 * mu}, {0, 2, 0, 2, -mu},
      {0, 2, 1, 3, mu},       {0, 3, 0, 3, -mu},      {0, 3, 1, 2, -mu},
      {1, 2, 1, 2, -mu},      {1, 3, 1, 3, -mu},      {2, 3, 2, 3, -4.0 * mu}};
  p.curvature_complete = true;

  p.expected_ricci = {{2, 2, -6.0 * mu}, {3, 3, -6.0 * mu}};
  p.ricci_complete = true;
  p.expected_star_ricci = {{0, 0, 4.0 * mu},
                           {1, 1, 4.0 * mu},
                           {2, 2, -2.0 * mu},
                           {3, 3, -2.0 * mu}};
  p.star_ricci_complete = true;

  Vec4 n2, n3;
  n2[0] = -8.0 * s;
  n2[1] = -8.0 * q;
  n3[0] = -8.0 * q;
  n3[1] = 8.0 * s;
  p.expected_N_s2 = n2;
  p.expected_N_s3 = n3;
  p.expected_B = Vec4{};
  p.expected_class = StructureClass::AlmostKahler;
  p.expected_verdicts = {{true, true, true, false}};
  return p;
}

Preset inoue_s0() {
  Preset p;
  p.name = "inoue-s0";
  p.labels = {"E1", "E2", "E3", "E4"};
  p.manifold.name = p.name;
  p.manifold.set_bracket(0, 1, 0, -1.0);
  p.manifold.set_bracket(1, 2, 2, -0.5);
  p.manifold.set_bracket(1, 3, 3, -0.5);

  set_J_pair(p.J, 0, 1, 1);
  set_J_pair(p.J, 2, 3, 1);

  p.expected_connection = {{0, 0, 1, 1.0},  {0, 1, 0, -1.0},
                           {2, 1, 2, 0.5},  {2, 2, 1, -0.5},
                           {3, 1, 3, 0.5},  {3, 3, 1, -0.5}};
  p.connection_complete = true;

  p.expected_curvature = {{0, 1, 0, 1, -1.0},  {0, 2, 0, 2, 0.5},
                          {0, 3, 0, 3, 0.5},   {1, 2, 1, 2, -0.25},
                          {1, 3, 1, 3, -0.25}, {2, 3, 2, 3, -0.25}};
  p.curvature_complete = true;

  p.expected_ricci = {{1, 1, -1.5}};
  p.ricci_complete = true;
  p.expected_star_ricci = {
      {0, 0, -1.0}, {1, 1, -1.0}, {2, 2, -0.25}, {3, 3, -0.25}};
  p.star_ricci_complete = true;

  Vec4 b;
  b[1] = 1.0;
  p.expected_B = b;
  p.expected_class = StructureClass::Hermitian;
  p.expected_verdicts = {{true, false, true, false}};
  return p;
}

Preset flat_torus() {
  Preset p;
  p.name = "flat-torus";
  p.labels = {"E1", "E2", "E3", "E4"};
  p.manifold.name = p.name;
  set_J_pair(p.J, 0, 1, 1);
  set_J_pair(p.J, 2, 3, 1);
  p.connection_complete = true;
  p.curvature_complete = true;
  p.ricci_complete = true;
  p.star_ricci_complete = true;
  p.expected_B = Vec4{};
  p.expected_class = StructureClass::Kahler;
  p.expected_verdicts = {{true, true, true, true}};
  return p;
}

std::vector<Preset> default_presets() {
  std::vector<Preset> v;
  v.push_back(kodaira_hermitian(1, 1));
  v.push_back(kodaira_hermitian(1, -1));
  v.push_back(kodaira_hermitian(-1, 1));
  v.push_back(kodaira_hermitian(-1, -1));
  v.push_back(kodaira_almost_kahler(1, 1, 0.0));
  v.push_back(kodaira_almost_kahler(1, -1, 0.7));
  v.push_back(kodaira_almost_kahler(-1, 1, 2.0));
  v.push_back(kodaira_almost_kahler(-1, -1, 4.0));
  v.push_back(lie_group_ak(0.0, 2.0));
  v.push_back(lie_group_ak(1.0, 1.0));
  v.push_back(lie_group_ak(2.0, -1.0));
  v.push_back(inoue_s0());
  v.push_back(flat_torus());
  return v;
}

namespace {

// Canonical (i<j, k<l, pair-sorted) value of g(R(E_i,E_j)E_k, E_l) implied
// by an entry stated with arbitrary index order.
void canonicalize_curv(int& i, int& j, int& k, int& l, double& v) {
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  if (k > l) {
    std::swap(k, l);
    v = -v;
  }
  if (pair_slot(i, j) > pair_slot(k, l)) {
    std::swap(i, k);
    std::swap(j, l);
  }
}

std::string idx(const Preset& p, int i) {
  return p.labels[static_cast<std::size_t>(i)];
}

void push(std::vector<Diff>& out, std::string name, double expect,
          double computed, double scale, double tol) {
  Diff d;
  d.name = std::move(name);
  d.expected = expect;
  d.computed = computed;
  d.pass = near_zero(std::abs(expect - computed), scale, tol);
  out.push_back(std::move(d));
}

}  // namespace

std::vector<Diff> check_expected(const Preset& p, const Analysis& a,
                                 double tol) {
  std::vector<Diff> out;

  {
    double exp_g[4][4][4] = {};
    bool listed[4][4][4] = {};
    for (const auto& e : p.expected_connection) {
      exp_g[e.k][e.i][e.j] += e.v;
      listed[e.k][e.i][e.j] = true;
    }
    const double sc = a.conn.max_abs();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          if (!p.connection_complete && !listed[k][i][j]) continue;
          push(out,
               "nabla_" + idx(p, i) + " " + idx(p, j) + " on " + idx(p, k),
               exp_g[k][i][j], a.conn.gamma[k][i][j], sc, tol);
        }
  }

  {
    double exp_r[6][6] = {};
    bool listed[6][6] = {};
    for (auto e : p.expected_curvature) {
      canonicalize_curv(e.i, e.j, e.k, e.l, e.v);
      exp_r[pair_slot(e.i, e.j)][pair_slot(e.k, e.l)] += e.v;
      listed[pair_slot(e.i, e.j)][pair_slot(e.k, e.l)] = true;
    }
    const double sc = a.curv.max_abs();
    static const int pr[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                 {1, 2}, {1, 3}, {2, 3}};
    for (int pq = 0; pq < 6; ++pq)
      for (int qq = pq; qq < 6; ++qq) {
        if (!p.curvature_complete && !listed[pq][qq]) continue;
        const int i = pr[pq][0], j = pr[pq][1], k = pr[qq][0], l = pr[qq][1];
        push(out,
             "R(" + idx(p, i) + "," + idx(p, j) + "," + idx(p, k) + "," +
                 idx(p, l) + ")",
             exp_r[pq][qq], a.curv.component(i, j, k, l), sc, tol);
      }
  }

  const auto check_mat = [&](const char* tag,
                             const std::vector<Preset::MatEntry>& entries,
                             bool complete, const Endo4& computed) {
    double exp_m[4][4] = {};
    bool listed[4][4] = {};
    for (const auto& e : entries) {
      exp_m[e.i][e.j] += e.v;
      listed[e.i][e.j] = true;
    }
    const double sc = computed.max_abs();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (!complete && !listed[i][j]) continue;
        push(out,
             std::string(tag) + "(" + idx(p, i) + "," + idx(p, j) + ")",
             exp_m[i][j], computed.m[i][j], sc, tol);
      }
  };
  check_mat("ricci", p.expected_ricci, p.ricci_complete, a.curv.ricci);
  check_mat("star_ricci", p.expected_star_ricci, p.star_ricci_complete,
            a.star_ricci_m);

  if (p.expected_B) {
    const double sc = std::max(norm(*p.expected_B), a.conn.max_abs());
    for (int k = 0; k < 4; ++k)
      push(out, "B[" + idx(p, k) + "]", (*p.expected_B)[k], a.herm.B[k], sc,
           tol);
  }

  if (p.expected_N_s2 || p.expected_N_s3) {
    const Bivector s2a = wedge(a.adapted[0], a.adapted[2]) +
                         wedge(a.adapted[3], a.adapted[1]);
    const Bivector s3a = wedge(a.adapted[0], a.adapted[3]) +
                         wedge(a.adapted[1], a.adapted[2]);
    const double sc = a.herm.N.max_abs();
    if (p.expected_N_s2) {
      const Vec4 n2 = a.herm.N.of_bivector(s2a);
      for (int k = 0; k < 4; ++k)
        push(out, "N(s2)[" + idx(p, k) + "]", (*p.expected_N_s2)[k], n2[k],
             sc, tol);
    }
    if (p.expected_N_s3) {
      const Vec4 n3 = a.herm.N.of_bivector(s3a);
      for (int k = 0; k < 4; ++k)
        push(out, "N(s3)[" + idx(p, k) + "]", (*p.expected_N_s3)[k], n3[k],
             sc, tol);
    }
  }

  if (p.expected_class)
    push(out, std::string("class=") + to_string(*p.expected_class),
         static_cast<double>(*p.expected_class),
         static_cast<double>(a.herm.cls), 0.0, 0.5);

  if (p.expected_verdicts) {
    const auto& ev = *p.expected_verdicts;
    const bool cv[4] = {a.verdict.harmonic_section, a.verdict.harmonic_map,
                        a.verdict.minimal, a.verdict.totally_geodesic};
    const char* names[4] = {"harmonic_section", "harmonic_map", "minimal",
                            "totally_geodesic"};
    for (int k = 0; k < 4; ++k)
      push(out, std::string("verdict:") + names[k],
           ev[static_cast<std::size_t>(k)] ? 1.0 : 0.0, cv[k] ? 1.0 : 0.0,
           0.0, 0.5);
  }
  return out;
}

}  // namespace twistor
