#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "hylat/geometry.hpp"
#include "test_util.hpp"

using namespace hylat;
using Eigen::Vector2d;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {

Vector3d apex() { return {0.0, 0.0, 1.0}; }

// Independent route to the midpoint distance: solve the law-of-cosines
// identity cosh(sqrt(k) s) = cosh(sqrt(k) s / 2) cosh(sqrt(k) cd) for cd by
// bisection.
double midpoint_distance_bisect(double k, double side) {
  const double sk = std::sqrt(k);
  const double target = std::cosh(sk * side) / std::cosh(sk * side / 2.0);
  double lo = 0.0, hi = side;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (std::cosh(sk * mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("lorentz_inner basic values") {
  CHECK(lorentz_inner(apex(), apex()) == doctest::Approx(-1.0).epsilon(1e-15));
  const Vector3d y{1.0, 0.0, std::sqrt(2.0)};
  CHECK(lorentz_inner(apex(), y) ==
        doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  const Vector3d x{std::sinh(1.0), 0.0, std::cosh(1.0)};
  CHECK(lorentz_inner(x, apex()) ==
        doctest::Approx(-std::cosh(1.0)).epsilon(1e-15));
}

TEST_CASE("lorentz_inner rejects bad dimensions") {
  const VectorXd a = VectorXd::Zero(3), b = VectorXd::Zero(4);
  CHECK_THROWS_AS(lorentz_inner(a, b), DimensionError);
  const Vector2d c{0.0, 1.0};
  CHECK_THROWS_AS(lorentz_inner(c, c), DimensionError);
}

TEST_CASE("hyperboloid_distance") {
  SplitMix64 rng(7);
  const VectorXd z = hylat_test::random_hyperboloid_point(rng, 2);
  CHECK(hyperboloid_distance(z, z, 1.0) == doctest::Approx(0.0).epsilon(1e-12));

  const Vector3d far{std::sinh(2.0), 0.0, std::cosh(2.0)};
  CHECK(hyperboloid_distance(apex(), far, 4.0) ==
        doctest::Approx(1.0).epsilon(1e-14));

  const Vector3d y{1.0, 0.0, std::sqrt(2.0)};
  CHECK(hyperboloid_distance(apex(), y, 1.0) ==
        doctest::Approx(0.881373587019543).epsilon(1e-14));

  // Arguments in the clamp zone collapse to zero distance; genuinely
  // off-sheet pairs are rejected.
  const Vector3d nudged = apex() * (1.0 + 1e-10);
  CHECK(hyperboloid_distance(apex(), nudged, 1.0) == 0.0);
  const Vector3d off = apex() * 0.9;
  CHECK_THROWS_AS(hyperboloid_distance(apex(), off, 1.0), ManifoldError);
  CHECK_THROWS_AS(hyperboloid_distance(apex(), apex(), 0.0), DomainError);
}

TEST_CASE("poincare_distance") {
  const Vector2d origin{0.0, 0.0};
  CHECK(poincare_distance(origin, origin, 1.0) == 0.0);
  const Vector2d radial{std::tanh(0.5), 0.0};
  CHECK(poincare_distance(origin, radial, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const Vector2d outside{1.0, 0.0};
  CHECK_THROWS_AS(poincare_distance(origin, outside, 1.0), DomainError);
}

TEST_CASE("poincare and hyperboloid metrics agree through the isometry") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const VectorXd x = hylat_test::random_hyperboloid_point(rng, 2, 3.0);
    const VectorXd y = hylat_test::random_hyperboloid_point(rng, 2, 3.0);
    const double k = 0.1 + 5.0 * rng.next_double();
    const double dh = hyperboloid_distance(x, y, k);
    const double dp = poincare_distance(to_poincare(x), to_poincare(y), k);
    CHECK(std::abs(dh - dp) <= 1e-9);
  }
}

TEST_CASE("to_poincare / to_hyperboloid") {
  CHECK(to_poincare(apex()).norm() == 0.0);
  const Vector3d x{std::sinh(1.0), 0.0, std::cosh(1.0)};
  CHECK(to_poincare(x)[0] == doctest::Approx(0.46211715726000974).epsilon(1e-15));
  CHECK(to_poincare(x)[1] == 0.0);

  const Vector2d origin{0.0, 0.0};
  CHECK((to_hyperboloid(origin) - apex()).norm() == 0.0);
  const Vector2d p{0.5, 0.0};
  const VectorXd h = to_hyperboloid(p);
  CHECK(h[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(h[1] == 0.0);
  CHECK(h[2] == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(lorentz_inner(h, h) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK_THROWS_AS(to_hyperboloid(Vector2d{0.8, 0.6}), DomainError);

  SplitMix64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const VectorXd z = hylat_test::random_hyperboloid_point(rng, 3, 3.0);
    CHECK((to_hyperboloid(to_poincare(z)) - z).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("tangent_project") {
  SplitMix64 rng(17);
  const VectorXd z = hylat_test::random_hyperboloid_point(rng, 2);

  const VectorXd already = hylat_test::random_tangent(rng, z);
  CHECK((tangent_project(z, already) - already).cwiseAbs().maxCoeff() <= 1e-14);

  CHECK(tangent_project(z, z).cwiseAbs().maxCoeff() <= 1e-14);

  for (int trial = 0; trial < 100; ++trial) {
    VectorXd g(3);
    for (int c = 0; c < 3; ++c) g[c] = 3.0 * rng.next_normal();
    CHECK(std::abs(lorentz_inner(tangent_project(z, g), z)) <= 1e-10);
  }
}

TEST_CASE("exp_map") {
  SplitMix64 rng(19);
  const VectorXd z = hylat_test::random_hyperboloid_point(rng, 2);
  CHECK((exp_map(z, VectorXd::Zero(3)) - z).cwiseAbs().maxCoeff() <= 1e-12);

  const Vector3d v{1.0, 0.0, 0.0};
  const VectorXd moved = exp_map(apex(), v);
  CHECK(moved[0] == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
  CHECK(moved[1] == 0.0);
  CHECK(moved[2] == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));

  CHECK_THROWS_AS(exp_map(apex(), Vector3d{0.0, 0.0, 0.5}), ManifoldError);

  for (int trial = 0; trial < 200; ++trial) {
    const VectorXd base = hylat_test::random_hyperboloid_point(rng, 2, 2.5);
    const VectorXd tangent = hylat_test::random_tangent(rng, base);
    const VectorXd out = exp_map(base, tangent);
    CHECK(std::abs(lorentz_inner(out, out) + 1.0) <= 1e-9);

    // Unit-speed geodesics: distance equals tangent norm / sqrt(k).
    const double k = 0.2 + 4.0 * rng.next_double();
    const double speed = std::sqrt(std::max(lorentz_inner(tangent, tangent), 0.0));
    CHECK(std::abs(hyperboloid_distance(base, out, k) - speed / std::sqrt(k)) <=
          1e-8);
  }
}

TEST_CASE("exp_map composed with projection stays on the sheet") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const VectorXd z = hylat_test::random_hyperboloid_point(rng, 2, 2.5);
    VectorXd g(3);
    for (int c = 0; c < 3; ++c) g[c] = 2.0 * rng.next_normal();
    const VectorXd out = exp_map(z, tangent_project(z, g));
    CHECK(std::abs(lorentz_inner(out, out) + 1.0) <= 1e-9);
    CHECK(out[2] >= 1.0 - 1e-12);
  }
}

TEST_CASE("hyperbolic rotations") {
  for (int kind : {1, 2, 3}) {
    CHECK((hyperbolic_rotation(kind, 0.0, 2) -
           Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(hyperbolic_rotation(4, 0.3, 2), DomainError);

  const Vector3d x{1.0, 0.0, std::sqrt(2.0)};
  const VectorXd rotated =
      hyperbolic_rotation(3, 3.14159265358979323846 / 2.0, 2) * x;
  CHECK(rotated[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(rotated[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rotated[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  SplitMix64 rng(29);
  for (int d : {2, 4}) {
    const Eigen::MatrixXd lambda = minkowski_form(d);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::MatrixXd q = hylat_test::random_rotation(rng, d);
      CHECK((q * lambda * q.transpose() - lambda).cwiseAbs().maxCoeff() <= 1e-10);
      const VectorXd a = hylat_test::random_hyperboloid_point(rng, d);
      const VectorXd b = hylat_test::random_hyperboloid_point(rng, d);
      const VectorXd qa = q * a, qb = q * b;
      CHECK(std::abs(lorentz_inner(qa, qa) + 1.0) <= 1e-9);
      CHECK(std::abs(hyperboloid_distance(qa, qb, 1.0) -
                     hyperboloid_distance(a, b, 1.0)) <= 1e-9);
    }
  }
}

TEST_CASE("lift_to_hyperboloid") {
  const Vector3d flat{0.0, 0.0, -5.0};
  CHECK((lift_to_hyperboloid(flat) - apex()).cwiseAbs().maxCoeff() == 0.0);

  SplitMix64 rng(31);
  const VectorXd z = hylat_test::random_hyperboloid_point(rng, 2, 3.0);
  CHECK((lift_to_hyperboloid(z) - z).cwiseAbs().maxCoeff() <= 1e-12);

  const Vector3d w{3.0, 4.0, 0.12345};
  const VectorXd lifted = lift_to_hyperboloid(w);
  CHECK(lifted[2] == doctest::Approx(std::sqrt(26.0)).epsilon(1e-15));
  CHECK(lorentz_inner(lifted, lifted) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("equilateral_midpoint_distance") {
  // Flat-space limit: the Euclidean median sqrt(3)/2.
  CHECK(equilateral_midpoint_distance(1e-8, 1.0) ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-6));

  CHECK(equilateral_midpoint_distance(1.0, 1.0) ==
        doctest::Approx(midpoint_distance_bisect(1.0, 1.0)).epsilon(1e-12));
  CHECK(equilateral_midpoint_distance(1.0, 1.0) ==
        doctest::Approx(0.834).epsilon(1e-3));

  SplitMix64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const double k = 0.05 + 8.0 * rng.next_double();
    const double s = 0.3 + 2.0 * rng.next_double();
    CHECK(equilateral_midpoint_distance(k, s) ==
          doctest::Approx(midpoint_distance_bisect(k, s)).epsilon(1e-10));
  }
}

TEST_CASE("equilateral_midpoint_distance is strictly increasing in k") {
  double prev = 0.0;
  bool first = true;
  for (double k = 0.01; k <= 10.0; k *= 1.25) {
    const double cd = equilateral_midpoint_distance(k, 1.0);
    if (!first) CHECK(cd > prev);
    prev = cd;
    first = false;
  }
}
