#pragma once

// Theorem-based harmonicity/minimality verdicts with per-condition
// breakdowns, cross-validated against the direct tension-field computation.

#include <optional>
#include <string>
#include <vector>

#include "twistor/curvature.hpp"
#include "twistor/hermitian.hpp"
#include "twistor/twistor_geometry.hpp"

namespace twistor {

struct Condition {
  std::string name;
  double value = 0;
  double threshold = 0;
  bool pass = false;
};

/// Span of the Nijenhuis image N(Lambda^2_0): dimension 0 or 2.
struct NSpace {
  std::vector<Vec4> basis;  // 0 or 2 orthonormal vectors
  int dim() const { return static_cast<int>(basis.size()); }
  bool rank_warning = false;  // numerical rank 1 was observed
};

struct Verdict {
  bool harmonic_section = false;
  bool harmonic_map = false;
  bool minimal = false;
  bool totally_geodesic = false;
  std::vector<Condition> conditions;
  std::string method;  // "theorem" or "direct"
  bool cross_check = false;
};

struct Analysis {
  FrameManifold manifold;
  Connection conn;
  CurvatureData curv;
  Endo4 star_ricci_m;
  double star_scalar = 0;
  HermitianData herm;
  TwistorContext ctx;

  std::array<Vec4, 4> adapted;  // frame with F2 = J F1, F4 = J F3, frakJ = s1
  NSpace nspace;

  TwistorVec tension_field;
  double tension_vertical_s2 = 0;  // coefficients in the adapted s-frame
  double tension_vertical_s3 = 0;
  double normal_res = 0;
  double max_second_fund = 0;  // max h_t-norm of the second fundamental form

  Verdict verdict;
};

/// Orthonormal frame (F1, JF1, F3, JF3) in which the twistor representative
/// becomes s1. Requires a validated J.
std::array<Vec4, 4> adapted_frame(const Endo4& j, double tol = kDefaultTol);

/// Full pipeline: connection, curvature, J tensors, twistor tension, theorem
/// and direct verdicts with cross-check.
Analysis analyze(const FrameManifold& m, const Endo4& j, double t = 1.0,
                 double tol = kDefaultTol);

/// Whether the J-invariant-Ricci shortcut applies (Hermitian class). When it
/// does, the minimality and harmonic-section verdicts are asserted to hold.
bool j_invariant_ricci_shortcut(const Analysis& a);

}  // namespace twistor
