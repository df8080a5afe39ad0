#pragma once

// Built-in parameterized homogeneous geometries with their published tensor
// tables, used for golden regression and by the CLI.

#include <optional>
#include <string>
#include <vector>

#include "twistor/classifier.hpp"

namespace twistor {

struct BadParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Preset {
  std::string name;
  std::array<std::string, 4> labels;  // frame vector names per slot
  FrameManifold manifold;
  Endo4 J;

  struct ConnEntry {
    int i, j, k;  // nabla_{E_i} E_j component on E_k (0-based slots)
    double v;
  };
  struct CurvEntry {
    int i, j, k, l;  // g(R(E_i,E_j)E_k, E_l)
    double v;
  };
  struct MatEntry {
    int i, j;
    double v;
  };

  // Expected tables; "complete" means unlisted components are expected zero.
  std::vector<ConnEntry> expected_connection;
  bool connection_complete = false;
  std::vector<CurvEntry> expected_curvature;
  bool curvature_complete = false;
  std::vector<MatEntry> expected_ricci;
  bool ricci_complete = false;
  std::vector<MatEntry> expected_star_ricci;
  bool star_ricci_complete = false;
  std::optional<Vec4> expected_B;
  std::optional<Vec4> expected_N_s2;  // N on the adapted s2, s3
  std::optional<Vec4> expected_N_s3;
  std::optional<StructureClass> expected_class;
  // section, map, minimal, totally geodesic
  std::optional<std::array<bool, 4>> expected_verdicts;

  /// Slot of a labelled frame vector.
  int slot(const std::string& label) const;
};

Preset kodaira_hermitian(int eps1, int eps2);
Preset kodaira_almost_kahler(int eps1, int eps2, double phi);
Preset lie_group_ak(double s, double t);
Preset inoue_s0();
Preset flat_torus();

/// All presets at default parameters (for exhaustive sweeps in tests).
std::vector<Preset> default_presets();

struct Diff {
  std::string name;
  double expected = 0;
  double computed = 0;
  bool pass = false;
};

/// Per-entry comparison of the preset's published tables against a pipeline
/// run; used by the golden tests and the CLI diff printout.
std::vector<Diff> check_expected(const Preset& p, const Analysis& a,
                                 double tol = kDefaultTol);

}  // namespace twistor
