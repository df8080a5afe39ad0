#include "twistor/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace twistor {

using nlohmann::json;

namespace {

double get_number(const json& j, const std::string& where) {
  if (!j.is_number())
    throw ParseError(where + ": expected a number, got " +
                     std::string(j.type_name()));
  return j.get<double>();
}

int get_index(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(where + ": expected an integer frame index");
  const int v = j.get<int>();
  if (v < 1 || v > 4)
    throw ParseError(where + ": frame index " + std::to_string(v) +
                     " out of range 1..4");
  return v;
}

}  // namespace

InputSpec parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");

  InputSpec in;
  in.name = doc.value("name", std::string("input"));
  in.manifold.name = in.name;
  if (doc.contains("tolerance"))
    in.tol = get_number(doc["tolerance"], "tolerance");
  if (doc.contains("jacobi_tolerance"))
    in.jacobi_tol = get_number(doc["jacobi_tolerance"], "jacobi_tolerance");

  if (!doc.contains("structure_constants") ||
      !doc["structure_constants"].is_array())
    throw ParseError("structure_constants: required array is missing");
  std::size_t n = 0;
  for (const auto& e : doc["structure_constants"]) {
    const std::string where = "structure_constants[" + std::to_string(n) + "]";
    ++n;
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    for (const char* f : {"i", "j", "k", "c"})
      if (!e.contains(f))
        throw ParseError(where + ": missing field '" + f + "'");
    const int i = get_index(e["i"], where + ".i");
    const int j = get_index(e["j"], where + ".j");
    const int k = get_index(e["k"], where + ".k");
    if (i == j)
      throw ParseError(where + ": bracket indices i and j must differ");
    in.manifold.set_bracket(i - 1, j - 1, k - 1, get_number(e["c"], where + ".c"));
  }

  if (!doc.contains("J") || !doc["J"].is_array() || doc["J"].size() != 4)
    throw ParseError("J: required 4x4 row-major matrix is missing");
  for (int r = 0; r < 4; ++r) {
    const auto& row = doc["J"][static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 4)
      throw ParseError("J[" + std::to_string(r) + "]: expected 4 entries");
    for (int c = 0; c < 4; ++c)
      in.J.m[r][c] = get_number(row[static_cast<std::size_t>(c)],
                                "J[" + std::to_string(r) + "][" +
                                    std::to_string(c) + "]");
  }
  return in;
}

InputSpec load_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str());
}

nlohmann::json input_json(const InputSpec& in) {
  json sc = json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (in.manifold.c[k][i][j] != 0.0)
          sc.push_back({{"i", i + 1},
                        {"j", j + 1},
                        {"k", k + 1},
                        {"c", in.manifold.c[k][i][j]}});
  json jm = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(in.J.m[r][c]);
    jm.push_back(row);
  }
  return {{"name", in.name},
          {"structure_constants", sc},
          {"J", jm},
          {"tolerance", in.tol},
          {"jacobi_tolerance", in.jacobi_tol}};
}

namespace {

json vec_json(const Vec4& v) {
  return json::array({v[0], v[1], v[2], v[3]});
}

json mat_json(const Endo4& m) {
  json r = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m.m[i][j]);
    r.push_back(row);
  }
  return r;
}

static const int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                 {1, 2}, {1, 3}, {2, 3}};

json curvature_json(const CurvatureData& c) {
  // Canonical non-zero components g(R(E_i,E_j)E_k, E_l), 1-based indices.
  json r = json::array();
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      const int i = kPairs[p][0], j = kPairs[p][1];
      const int k = kPairs[q][0], l = kPairs[q][1];
      const double v = c.component(i, j, k, l);
      if (v != 0.0)
        r.push_back({{"i", i + 1},
                     {"j", j + 1},
                     {"k", k + 1},
                     {"l", l + 1},
                     {"value", v}});
    }
  return r;
}

json verdict_json(const Verdict& v) {
  json conds = json::array();
  for (const auto& c : v.conditions)
    conds.push_back({{"name", c.name},
                     {"value", c.value},
                     {"threshold", c.threshold},
                     {"pass", c.pass}});
  return {{"harmonic_section", v.harmonic_section},
          {"harmonic_map", v.harmonic_map},
          {"minimal_imbedding", v.minimal},
          {"totally_geodesic", v.totally_geodesic},
          {"method", v.method},
          {"cross_check", v.cross_check},
          {"conditions", conds}};
}

}  // namespace

nlohmann::json report_json(const Analysis& a, const std::vector<Diff>* diffs) {
  InputSpec echo;
  echo.name = a.manifold.name;
  echo.manifold = a.manifold;
  echo.J = a.herm.J;
  echo.tol = a.ctx.tol;

  json conn = json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (a.conn.gamma[k][i][j] != 0.0)
          conn.push_back({{"i", i + 1},
                          {"j", j + 1},
                          {"k", k + 1},
                          {"value", a.conn.gamma[k][i][j]}});

  json nj = json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Vec4 v = a.herm.N.of_pair(i, j);
      if (norm(v) != 0.0)
        nj.push_back({{"i", i + 1}, {"j", j + 1}, {"value", vec_json(v)}});
    }

  json rep = {
      {"schema", kReportSchema},
      {"t", a.ctx.t},
      {"tolerance", a.ctx.tol},
      {"input", input_json(echo)},
      {"connection", conn},
      {"curvature", curvature_json(a.curv)},
      {"ricci", mat_json(a.curv.ricci)},
      {"star_ricci", mat_json(a.star_ricci_m)},
      {"scalar", a.curv.scalar},
      {"star_scalar", a.star_scalar},
      {"theta", json::array({a.herm.theta[0], a.herm.theta[1],
                             a.herm.theta[2], a.herm.theta[3]})},
      {"B", vec_json(a.herm.B)},
      {"dtheta", mat_json(a.herm.dtheta)},
      {"dtheta_one_one", a.herm.dtheta_one_one},
      {"nijenhuis", nj},
      {"nspace_dim", a.nspace.dim()},
      {"class", to_string(a.herm.cls)},
      {"integrable", a.herm.integrable},
      {"symplectic", a.herm.symplectic},
      {"tension",
       {{"vertical_s2", a.tension_vertical_s2},
        {"vertical_s3", a.tension_vertical_s3},
        {"horizontal", vec_json(a.tension_field.horizontal)}}},
      {"normal_residual", a.normal_res},
      {"second_fundamental_max", a.max_second_fund},
      {"verdict", verdict_json(a.verdict)}};

  if (diffs) {
    json d = json::array();
    for (const auto& e : *diffs)
      d.push_back({{"name", e.name},
                   {"expected", e.expected},
                   {"computed", e.computed},
                   {"pass", e.pass}});
    rep["expected_diffs"] = d;
  }
  return rep;
}

std::string report_table(const Analysis& a, const std::vector<Diff>* diffs) {
  const json r = report_json(a, diffs);
  std::ostringstream out;
  out.precision(12);
  out << "manifold: " << a.manifold.name << "   t = " << a.ctx.t
      << "   tolerance = " << a.ctx.tol << "\n";
  out << "class: " << r["class"].get<std::string>()
      << "  (integrable: " << (a.herm.integrable ? "yes" : "no")
      << ", symplectic: " << (a.herm.symplectic ? "yes" : "no") << ")\n\n";

  out << "connection (nabla_Ei Ej = sum Gamma^k Ek):\n";
  for (const auto& e : r["connection"])
    out << "  Gamma[" << e["i"] << "][" << e["j"] << "] on E" << e["k"]
        << " = " << e["value"].get<double>() << "\n";
  out << "curvature g(R(Ei,Ej)Ek,El), canonical non-zero components:\n";
  for (const auto& e : r["curvature"])
    out << "  R(" << e["i"] << e["j"] << ")(" << e["k"] << e["l"]
        << ") = " << e["value"].get<double>() << "\n";

  const auto print_mat = [&](const char* nm, const Endo4& m) {
    out << nm << ":\n";
    for (int i = 0; i < 4; ++i) {
      out << "  ";
      for (int j = 0; j < 4; ++j) out << m.m[i][j] << (j < 3 ? "  " : "\n");
    }
  };
  print_mat("ricci", a.curv.ricci);
  print_mat("star_ricci", a.star_ricci_m);
  out << "scalar = " << a.curv.scalar << "   star_scalar = " << a.star_scalar
      << "\n\n";

  out << "theta = (" << a.herm.theta[0] << ", " << a.herm.theta[1] << ", "
      << a.herm.theta[2] << ", " << a.herm.theta[3] << ")";
  out << "   B = (" << a.herm.B[0] << ", " << a.herm.B[1] << ", "
      << a.herm.B[2] << ", " << a.herm.B[3] << ")\n";
  out << "dtheta is (1,1): " << (a.herm.dtheta_one_one ? "yes" : "no")
      << "   N-image dimension: " << a.nspace.dim() << "\n\n";

  out << "tension: vertical = (" << a.tension_vertical_s2 << ") s2 + ("
      << a.tension_vertical_s3 << ") s3,  horizontal = ("
      << a.tension_field.horizontal[0] << ", "
      << a.tension_field.horizontal[1] << ", "
      << a.tension_field.horizontal[2] << ", "
      << a.tension_field.horizontal[3] << ")\n";
  out << "normal residual = " << a.normal_res
      << "   max |second fundamental form| = " << a.max_second_fund << "\n\n";

  const Verdict& v = a.verdict;
  out << "verdict (" << v.method << " route, cross-check "
      << (v.cross_check ? "ok" : "MISMATCH") << "):\n";
  out << "  harmonic section:   " << (v.harmonic_section ? "yes" : "no")
      << "\n";
  out << "  harmonic map:       " << (v.harmonic_map ? "yes" : "no") << "\n";
  out << "  minimal imbedding:  " << (v.minimal ? "yes" : "no") << "\n";
  out << "  totally geodesic:   " << (v.totally_geodesic ? "yes" : "no")
      << "\n";
  for (const auto& c : v.conditions)
    out << "    " << (c.pass ? "pass" : "FAIL") << "  " << c.name << " = "
        << c.value << "  (threshold " << c.threshold << ")\n";

  if (diffs) {
    out << "\nexpected-value diffs:\n";
    for (const auto& e : *diffs)
      if (!e.pass || e.expected != 0.0 || e.computed != 0.0)
        out << "  " << (e.pass ? "pass" : "FAIL") << "  " << e.name
            << ": expected " << e.expected << ", computed " << e.computed
            << "\n";
  }
  return out.str();
}

}  // namespace twistor
