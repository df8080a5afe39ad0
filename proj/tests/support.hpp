#pragma once

// Shared helpers for the test suites: deterministic RNG, random rotations,
// frame conjugation of a homogeneous geometry (which preserves the Jacobi
// identity, orientation and the structure class), and randomized valid
// inputs drawn from the catalog families.

#include <cmath>
#include <numbers>
#include <random>

#include "twistor/catalog.hpp"
#include "twistor/classifier.hpp"

namespace twistor::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240911u);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Vec4 random_unit_vec() {
  std::normal_distribution<double> g;
  Vec4 v;
  double n = 0;
  do {
    for (int i = 0; i < 4; ++i) v[i] = g(rng());
    n = norm(v);
  } while (n < 1e-3);
  return v * (1.0 / n);
}

/// Random special-orthogonal matrix via Gram-Schmidt on Gaussian columns,
/// with the last column's sign fixed so det = +1.
inline Endo4 random_rotation() {
  std::normal_distribution<double> g;
  Vec4 cols[4];
  for (int c = 0; c < 4; ++c) {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[i] = g(rng());
    for (int p = 0; p < c; ++p) v = v - cols[p] * dot(v, cols[p]);
    const double n = norm(v);
    if (n < 1e-6) return random_rotation();  // rare near-degenerate draw
    cols[c] = v * (1.0 / n);
  }
  Endo4 q;
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) q.m[r][c] = cols[c][r];
  // det via wedge pairing of the first two columns against the last two.
  const Bivector w12 = wedge(cols[0], cols[1]);
  const Bivector w34 = wedge(cols[2], cols[3]);
  double det = 0;
  // <w12 ^ w34, vol> in components: sum over complementary index pairs.
  det = w12[0] * w34[5] - w12[1] * w34[4] + w12[2] * w34[3] +
        w12[3] * w34[2] - w12[4] * w34[1] + w12[5] * w34[0];
  if (det < 0)
    for (int r = 0; r < 4; ++r) q.m[r][3] = -q.m[r][3];
  return q;
}

/// New frame F_a = sum_i Q[i][a] E_i; brackets and J rewritten in it.
inline FrameManifold conjugate_manifold(const FrameManifold& m,
                                        const Endo4& q) {
  FrameManifold out;
  out.name = m.name + "-rotated";
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Vec4 fa, fb;
      for (int i = 0; i < 4; ++i) {
        fa[i] = q.m[i][a];
        fb[i] = q.m[i][b];
      }
      const Vec4 br = m.bracket(fa, fb);
      for (int mm = 0; mm < 4; ++mm) {
        double s = 0;
        for (int l = 0; l < 4; ++l) s += q.m[l][mm] * br[l];
        out.c[mm][a][b] = s;
      }
    }
  return out;
}

inline Endo4 conjugate_endo(const Endo4& j, const Endo4& q) {
  return q.transpose().compose(j).compose(q);
}

struct RandomInput {
  FrameManifold manifold;
  Endo4 J;
  StructureClass cls;  // class of the source preset
};

/// A valid randomized input: a randomly parameterized catalog geometry
/// conjugated by a random rotation (J carried along).
inline RandomInput random_input() {
  const int pick = std::uniform_int_distribution<int>(0, 4)(rng());
  Preset p;
  switch (pick) {
    case 0:
      p = kodaira_hermitian(uniform(0, 1) < 0.5 ? 1 : -1,
                            uniform(0, 1) < 0.5 ? 1 : -1);
      break;
    case 1:
      p = kodaira_almost_kahler(uniform(0, 1) < 0.5 ? 1 : -1,
                                uniform(0, 1) < 0.5 ? 1 : -1,
                                uniform(0.0, 2.0 * std::numbers::pi));
      break;
    case 2: {
      double t = 0;
      while (std::abs(t) < 0.2) t = uniform(-2.0, 2.0);
      p = lie_group_ak(uniform(-2.0, 2.0), t);
      break;
    }
    case 3:
      p = inoue_s0();
      break;
    default:
      p = flat_torus();
      break;
  }
  const Endo4 q = random_rotation();
  RandomInput in;
  in.manifold = conjugate_manifold(p.manifold, q);
  in.J = conjugate_endo(p.J, q);
  in.cls = *p.expected_class;
  return in;
}

/// A random compatible almost complex structure (positively oriented) on an
/// arbitrary frame: J = K_sigma for a random unit self-dual sigma.
inline Endo4 random_compatible_J() {
  const SelfDualTriple s = selfdual_basis();
  Vec4 x = random_unit_vec();
  // use three of the four Gaussian coordinates for a point of S^2
  double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  while (n < 1e-3) {
    x = random_unit_vec();
    n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  }
  const Bivector sigma =
      s.s1 * (x[0] / n) + s.s2 * (x[1] / n) + s.s3 * (x[2] / n);
  return K_op(sigma);
}

}  // namespace twistor::testing
