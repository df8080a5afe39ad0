#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "twistor/frame_algebra.hpp"

using namespace twistor;
using namespace twistor::testing;

namespace {

Bivector random_bivector() {
  Bivector b;
  for (int s = 0; s < 6; ++s) b[s] = uniform(-2.0, 2.0);
  return b;
}

Bivector random_selfdual() { return selfdual_part(random_bivector()) * 2.0; }

}  // namespace

TEST_CASE("bivector metric and wedge") {
  // g(v1^v2, v3^v4) = det[g(v_i,v_j)]/2, so a single wedge has norm^2 = 1/2
  const Vec4 e0 = basis_vec(0), e1 = basis_vec(1);
  CHECK(biv_dot(wedge(e0, e1), wedge(e0, e1)) == doctest::Approx(0.5));

  const SelfDualTriple s = selfdual_basis();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(biv_dot(s[a], s[b]) == doctest::Approx(a == b ? 1.0 : 0.0));

  for (int it = 0; it < 100; ++it) {
    const Vec4 x = random_unit_vec(), y = random_unit_vec();
    // Lagrange identity scaled by the 1/2 of the bivector metric
    const double expect =
        0.5 * (dot(x, x) * dot(y, y) - dot(x, y) * dot(x, y));
    CHECK(biv_dot(wedge(x, y), wedge(x, y)) ==
          doctest::Approx(expect).epsilon(1e-10));
    CHECK(biv_norm(wedge(x, y) + wedge(y, x)) == doctest::Approx(0.0));
  }
}

TEST_CASE("component accessors are antisymmetric") {
  Bivector b;
  biv_add(b, 2, 0, 1.5);
  CHECK(biv_component(b, 2, 0) == doctest::Approx(1.5));
  CHECK(biv_component(b, 0, 2) == doctest::Approx(-1.5));
  CHECK(pair_slot(0, 2) == 1);
}

TEST_CASE("hodge star is an involution with the right eigenspaces") {
  for (int it = 0; it < 100; ++it) {
    const Bivector b = random_bivector();
    CHECK(biv_norm(hodge_star(hodge_star(b)) - b) < 1e-12);
    const Bivector p = selfdual_part(b);
    CHECK(biv_norm(hodge_star(p) - p) < 1e-12);
    const Bivector mns = antiselfdual_part(b);
    CHECK(biv_norm(hodge_star(mns) + mns) < 1e-12);
    CHECK(biv_norm(p + mns - b) < 1e-12);
    CHECK(std::abs(biv_dot(p, mns)) < 1e-12);
  }
}

TEST_CASE("self-dual basis orientation") {
  const SelfDualTriple s = selfdual_basis();
  CHECK(biv_norm(cross(s.s1, s.s2) - s.s3) < 1e-12);
  CHECK(biv_norm(cross(s.s2, s.s3) - s.s1) < 1e-12);
  CHECK(biv_norm(cross(s.s3, s.s1) - s.s2) < 1e-12);

  // Even permutations keep the orientation; odd ones are rejected.
  const SelfDualTriple p = selfdual_basis({2, 1, 4, 3});
  CHECK(biv_norm(cross(p.s1, p.s2) - p.s3) < 1e-12);
  CHECK_THROWS_AS(selfdual_basis({2, 1, 3, 4}), OrientationError);
  CHECK_THROWS_AS(selfdual_basis({1, 1, 3, 4}), OrientationError);
}

TEST_CASE("cross product rejects non-self-dual input") {
  const Bivector asd = wedge(basis_vec(0), basis_vec(1)) -
                       wedge(basis_vec(2), basis_vec(3));
  CHECK_THROWS_AS(cross(asd, selfdual_basis().s1), NotSelfDual);
}

TEST_CASE("K endomorphisms") {
  const SelfDualTriple s = selfdual_basis();
  for (int a = 0; a < 3; ++a) {
    const Endo4 k = K_op(s[a]);
    const Endo4 sq = k.compose(k);
    CHECK((sq + Endo4::identity()).max_abs() < 1e-12);  // complex structure
    CHECK((k + k.transpose()).max_abs() < 1e-12);       // skew
  }
  for (int it = 0; it < 100; ++it) {
    const Bivector a = random_bivector(), b = random_bivector();
    CHECK(endo_metric_G(K_op(a), K_op(b)) ==
          doctest::Approx(2.0 * biv_dot(a, b)).epsilon(1e-10));
    // defining property against random vectors
    const Vec4 x = random_unit_vec(), y = random_unit_vec();
    CHECK(dot(K_op(a).apply(x), y) ==
          doctest::Approx(2.0 * biv_dot(a, wedge(x, y))).epsilon(1e-10));
  }
}

TEST_CASE("composition identity on self-dual bivectors") {
  for (int it = 0; it < 150; ++it) {
    const Bivector a = random_selfdual(), b = random_selfdual();
    const Endo4 lhs = K_op(a).compose(K_op(b));
    const Endo4 rhs = Endo4::identity() * (-biv_dot(a, b)) + K_op(cross(a, b));
    CHECK((lhs - rhs).max_abs() < 1e-8);
  }
}

TEST_CASE("endomorphism extension to bivectors") {
  for (int it = 0; it < 100; ++it) {
    const Endo4 q = random_rotation();
    const Vec4 x = random_unit_vec(), y = random_unit_vec();
    const Bivector lhs = endo_on_bivector(q, wedge(x, y));
    const Bivector rhs = wedge(q.apply(x), y) + wedge(x, q.apply(y));
    CHECK(biv_norm(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("near_zero is scale-aware") {
  CHECK(near_zero(5e-10, 0.0, 1e-9));
  CHECK_FALSE(near_zero(5e-9, 0.0, 1e-9));
  CHECK(near_zero(5e-7, 1000.0, 1e-9));
}
