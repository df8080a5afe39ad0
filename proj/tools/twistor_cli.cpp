// Command-line front end: classify a manifold+J input file or a catalog
// preset, or sweep a preset's parameter grid, printing verdict tables or a
// JSON report.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistor/report.hpp"

using namespace twistor;

namespace {

constexpr const char* kTolEnvVar = "TWISTOR_TOLERANCE";

double default_tolerance() {
  if (const char* s = std::getenv(kTolEnvVar)) {
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      throw ParseError(std::string(kTolEnvVar) + " is not a number: " + s);
    }
  }
  return kDefaultTol;
}

struct PresetArgs {
  int eps1 = 1, eps2 = 1;
  double phi = 0.0;
  double s = 1.0, lt = 1.0;
};

Preset make_preset(const std::string& name, const PresetArgs& pa) {
  if (name == "kodaira-hermitian") return kodaira_hermitian(pa.eps1, pa.eps2);
  if (name == "kodaira-ak" || name == "kodaira-almost-kahler")
    return kodaira_almost_kahler(pa.eps1, pa.eps2, pa.phi);
  if (name == "lie-group" || name == "lie-group-almost-kahler")
    return lie_group_ak(pa.s, pa.lt);
  if (name == "inoue-s0") return inoue_s0();
  if (name == "flat-torus") return flat_torus();
  throw BadParameter(
      "unknown preset '" + name +
      "' (known: kodaira-hermitian, kodaira-ak, lie-group, inoue-s0, "
      "flat-torus)");
}

int run_classify(const std::string& path, const std::string& preset_name,
                 const PresetArgs& pa, double t, double tol,
                 const std::string& format) {
  Analysis a;
  std::vector<Diff> diffs;
  bool have_diffs = false;
  if (!preset_name.empty()) {
    const Preset p = make_preset(preset_name, pa);
    a = analyze(p.manifold, p.J, t, tol);
    diffs = check_expected(p, a, tol);
    have_diffs = true;
  } else {
    const InputSpec in = load_input_file(path);
    a = analyze(in.manifold, in.J, t, tol == kDefaultTol ? in.tol : tol);
  }
  if (format == "json")
    std::cout << report_json(a, have_diffs ? &diffs : nullptr).dump(2)
              << "\n";
  else
    std::cout << report_table(a, have_diffs ? &diffs : nullptr);
  return 0;
}

struct Row {
  std::string params;
  double t;
  Analysis a;
};

void print_rows(const std::vector<Row>& rows, const std::string& format) {
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
      const Verdict& v = r.a.verdict;
      out.push_back({{"params", r.params},
                     {"t", r.t},
                     {"class", to_string(r.a.herm.cls)},
                     {"harmonic_section", v.harmonic_section},
                     {"harmonic_map", v.harmonic_map},
                     {"minimal_imbedding", v.minimal},
                     {"totally_geodesic", v.totally_geodesic},
                     {"cross_check", v.cross_check}});
    }
    std::cout << nlohmann::json({{"schema", kReportSchema},
                                 {"sweep", out}})
                     .dump(2)
              << "\n";
    return;
  }
  std::cout << "params                          t     class         sec map "
               "min geo xchk\n";
  for (const auto& r : rows) {
    const Verdict& v = r.a.verdict;
    std::ostringstream line;
    line << r.params;
    std::string p = line.str();
    p.resize(30, ' ');
    std::cout << p << "  " << r.t << "   " << to_string(r.a.herm.cls);
    std::string cls = to_string(r.a.herm.cls);
    for (std::size_t k = cls.size(); k < 14; ++k) std::cout << ' ';
    std::cout << (v.harmonic_section ? " y " : " n ")
              << (v.harmonic_map ? "  y " : "  n ")
              << (v.minimal ? "  y " : "  n ")
              << (v.totally_geodesic ? "  y " : "  n ")
              << (v.cross_check ? "  ok" : "  MISMATCH") << "\n";
  }
}

std::vector<double> parse_list(const std::string& csv, const char* what) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": bad number '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError(std::string(what) + ": empty list");
  return out;
}

int run_sweep(const std::string& preset_name, int steps,
              const std::string& t_values, const std::string& s_values,
              const std::string& lt_values, double tol,
              const std::string& format) {
  const std::vector<double> ts = parse_list(t_values, "--t-values");
  std::vector<Row> rows;
  const auto add = [&](const Preset& p, const std::string& params) {
    for (double t : ts) {
      Row r;
      r.params = params;
      r.t = t;
      r.a = analyze(p.manifold, p.J, t, tol);
      rows.push_back(std::move(r));
    }
  };

  if (preset_name == "kodaira-ak" ||
      preset_name == "kodaira-almost-kahler") {
    for (int e1 : {1, -1})
      for (int e2 : {1, -1})
        for (int k = 0; k < steps; ++k) {
          const double phi = 2.0 * std::numbers::pi * k / steps;
          std::ostringstream ps;
          ps << "eps=(" << e1 << "," << e2 << ") phi=" << phi;
          add(kodaira_almost_kahler(e1, e2, phi), ps.str());
        }
  } else if (preset_name == "kodaira-hermitian") {
    for (int e1 : {1, -1})
      for (int e2 : {1, -1}) {
        std::ostringstream ps;
        ps << "eps=(" << e1 << "," << e2 << ")";
        add(kodaira_hermitian(e1, e2), ps.str());
      }
  } else if (preset_name == "lie-group" ||
             preset_name == "lie-group-almost-kahler") {
    for (double s : parse_list(s_values, "--s-values"))
      for (double lt : parse_list(lt_values, "--lt-values")) {
        std::ostringstream ps;
        ps << "(s,t)=(" << s << "," << lt << ")";
        add(lie_group_ak(s, lt), ps.str());
      }
  } else {
    add(make_preset(preset_name, PresetArgs{}), preset_name);
  }
  print_rows(rows, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Harmonicity and minimality of a compatible almost complex structure "
      "viewed as a section of the twistor bundle of a homogeneous "
      "4-manifold.\nThe default tolerance (1e-9) can be overridden with the "
      "TWISTOR_TOLERANCE environment variable."};
  app.require_subcommand(1);

  std::string path, preset_name, format = "table";
  PresetArgs pa;
  double t = 1.0;
  double tol = -1.0;

  auto* classify = app.add_subcommand(
      "classify", "Run the full pipeline on an input file or a preset");
  classify->add_option("input", path, "JSON input file");
  classify->add_option("--preset", preset_name, "catalog preset name");
  classify->add_option("--eps1", pa.eps1, "Kodaira sign parameter");
  classify->add_option("--eps2", pa.eps2, "Kodaira sign parameter");
  classify->add_option("--phi", pa.phi, "Kodaira almost-Kahler angle");
  classify->add_option("--s", pa.s, "Lie-group parameter s");
  classify->add_option("--lt", pa.lt, "Lie-group parameter t (non-zero)");
  classify->add_option("--t", t, "fibre scale of the twistor metric h_t");
  classify->add_option("--tol", tol, "numeric tolerance");
  classify->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  int steps = 8;
  std::string t_values = "1", s_values = "0,1,2,3",
              lt_values = "2,1,-1,0.5";
  auto* sweep = app.add_subcommand(
      "sweep", "Verdict table over a preset's parameter grid");
  sweep->add_option("--preset", preset_name, "catalog preset name")
      ->required();
  sweep->add_option("--steps", steps, "phi grid size for kodaira-ak");
  sweep->add_option("--t-values", t_values, "comma list of fibre scales t");
  sweep->add_option("--s-values", s_values, "comma list for lie-group s");
  sweep->add_option("--lt-values", lt_values, "comma list for lie-group t");
  sweep->add_option("--tol", tol, "numeric tolerance");
  sweep->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (tol < 0) tol = default_tolerance();
    if (classify->parsed()) {
      if (path.empty() && preset_name.empty()) {
        std::cerr << "classify: give an input file or --preset\n";
        return 2;
      }
      return run_classify(path, preset_name, pa, t, tol, format);
    }
    return run_sweep(preset_name, steps, t_values, s_values, lt_values, tol,
                     format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
