#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ballproj/projection.hpp"
#include "ballproj/rng.hpp"

using namespace ballproj;

namespace {
const Ball kUnitDisk{{0.0, 0.0}, 1.0};
}

TEST_CASE("classify") {
  {
    const Region r = classify(kUnitDisk, {0.5, 0.0}, 1e-9);
    CHECK(r.tag == RegionTag::Interior);
    CHECK(r.signed_gap == -0.5);
  }
  {
    const Region r = classify(kUnitDisk, {1.0, 0.0}, 1e-9);
    CHECK(r.tag == RegionTag::Boundary);
    CHECK(r.signed_gap == 0.0);
  }
  {
    const Region r = classify(Ball{{1.0, 1.0}, 2.0}, {4.0, 5.0}, 1e-9);
    CHECK(r.tag == RegionTag::Exterior);
    CHECK(r.signed_gap == 3.0);
  }
  CHECK_THROWS_AS(classify(kUnitDisk, {1.0}, 1e-9), Error);
  CHECK_THROWS_AS(classify(kUnitDisk, {1.0, 0.0}, 0.0), Error);
}

TEST_CASE("classify tolerance is relative to max(1, radius)") {
  const Ball big{{0.0}, 100.0};
  // gap of 5e-8 with tol 1e-9: inside the band for r=100, outside for r=1.
  CHECK(classify(big, {100.0 + 5e-8}, 1e-9).tag == RegionTag::Boundary);
  CHECK(classify(Ball{{0.0}, 1.0}, {1.0 + 5e-8}, 1e-9).tag == RegionTag::Exterior);
}

TEST_CASE("project") {
  CHECK(distance(project(kUnitDisk, {3.0, 4.0}), {0.6, 0.8}) <= 1e-15);
  CHECK(distance(project(Ball{{1.0, 1.0}, 2.0}, {4.0, 5.0}), {2.2, 2.6}) <= 1e-15);

  // Points in the ball come back bitwise unchanged, boundary included.
  const Vector inside{0.1, 0.2};
  CHECK(project(kUnitDisk, inside) == inside);
  const Vector on_sphere{1.0, 0.0};
  CHECK(project(kUnitDisk, on_sphere) == on_sphere);
}

TEST_CASE("projected points land in the ball") {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t dim = 1 + i % 6;
    const Ball b{rng.box_vector(dim, -2.0, 2.0), rng.uniform(0.2, 3.0)};
    const Vector x = rng.box_vector(dim, -6.0, 6.0);
    CHECK(distance(project(b, x), b.center) <= b.radius * (1.0 + 1e-12));
  }
}

TEST_CASE("direction_class") {
  CHECK(direction_class(kUnitDisk, {1.0, 0.0}, {1.0, 1.0}) == DirectionClass::Up);
  CHECK(direction_class(kUnitDisk, {1.0, 0.0}, {-1.0, 1.0}) == DirectionClass::Down);

  // Tangent direction: ||x + t v||^2 = 1 + t^2 never drops below 1, so the
  // defining inequality puts it in Up.
  for (double t = 1e-1; t >= 1e-12; t /= 10.0) {
    CHECK(norm(axpy(t, {0.0, 1.0}, {1.0, 0.0})) >= 1.0);
  }
  CHECK(direction_class(kUnitDisk, {1.0, 0.0}, {0.0, 1.0}) == DirectionClass::Up);

  CHECK_THROWS_AS(direction_class(kUnitDisk, {0.5, 0.0}, {1.0, 0.0}), Error);
  try {
    direction_class(kUnitDisk, {0.5, 0.0}, {1.0, 0.0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotBoundary);
  }
  try {
    direction_class(kUnitDisk, {1.0, 0.0}, zeros(2));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroDirection);
  }
}

TEST_CASE("up and down partition the nonzero directions") {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const std::size_t dim = 1 + i % 5;
    const Ball b{rng.box_vector(dim, -1.0, 1.0), rng.uniform(0.5, 2.0)};
    const Vector x = axpy(b.radius, rng.unit_vector(dim), b.center);
    Vector v = rng.box_vector(dim, -2.0, 2.0);
    if (is_zero(v)) v[0] = 1.0;
    // Exactly one class, and flipping the sign flips the class unless the
    // direction is tangent.
    const DirectionClass c = direction_class(b, x, v);
    const DirectionClass c_neg = direction_class(b, x, scaled(v, -1.0));
    const double ip = inner(sub(x, b.center), v);
    if (ip != 0.0) CHECK(c != c_neg);
    CHECK(c == (ip >= 0.0 ? DirectionClass::Up : DirectionClass::Down));
  }
}

TEST_CASE("direction_class matches its defining small-step inequality") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = 2 + i % 4;
    const Ball b{rng.box_vector(dim, -1.0, 1.0), rng.uniform(0.5, 1.5)};
    const Vector x = axpy(b.radius, rng.unit_vector(dim), b.center);
    const Vector s = sub(x, b.center);

    // One clearly leaving and one clearly entering direction.
    Vector w = rng.unit_vector(dim);
    const double a = inner(s, w) / inner(s, s);
    const Vector residual = sub(w, scaled(s, a));
    const Vector up = add(scaled(s, 0.5), residual);
    const Vector down = add(scaled(s, -0.5), residual);

    CHECK(direction_class(b, x, up) == DirectionClass::Up);
    CHECK(direction_class(b, x, down) == DirectionClass::Down);
    for (double t = 1e-3; t >= 1e-8 / 2; t /= 10.0) {
      CHECK(distance(axpy(t, up, x), b.center) - b.radius >= -1e-15);
      CHECK(distance(axpy(t, down, x), b.center) - b.radius < 0.0);
    }
  }

  // Tangent directions sit on the Up side of the split. Axis-aligned setup
  // keeps ||x + t v||^2 = r^2 + t^2 ||v||^2 exact so the small-step
  // inequality can be asserted without roundoff allowance.
  Rng rng2(15);
  for (int i = 0; i < 50; ++i) {
    const std::size_t dim = 2 + i % 4;
    const Ball b{zeros(dim), 1.0};
    Vector x = zeros(dim);
    x[0] = 1.0;
    Vector tangent = rng2.box_vector(dim, -2.0, 2.0);
    tangent[0] = 0.0;
    if (is_zero(tangent)) tangent[1] = 1.0;

    CHECK(direction_class(b, x, tangent) == DirectionClass::Up);
    for (double t = 1e-3; t >= 1e-8 / 2; t /= 10.0) {
      CHECK(distance(axpy(t, tangent, x), b.center) - b.radius >= 0.0);
    }
  }
}

TEST_CASE("nonexpansiveness and idempotence") {
  Rng rng(6);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t dim = 1 + i % 5;
    const Ball b{rng.box_vector(dim, -2.0, 2.0), rng.uniform(0.5, 2.0)};
    const Vector x1 = rng.box_vector(dim, -4.0, 4.0);
    const Vector x2 = rng.box_vector(dim, -4.0, 4.0);
    const Vector p1 = project(b, x1);
    CHECK(distance(p1, project(b, x2)) <= distance(x1, x2) + 1e-12);
    CHECK(distance(project(b, p1), p1) <= 1e-12);
  }
}

TEST_CASE("projection commutes with recentering") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t dim = 1 + i % 5;
    const Ball b{rng.box_vector(dim, -2.0, 2.0), rng.uniform(0.5, 2.0)};
    const Vector x = rng.box_vector(dim, -4.0, 4.0);
    const Ball centered{zeros(dim), b.radius};
    const Vector via_origin = add(b.center, project(centered, sub(x, b.center)));
    const double scale = std::max(1.0, norm(x) + norm(b.center) + b.radius);
    CHECK(distance(project(b, x), via_origin) <= 1e-14 * scale);
  }
}

TEST_CASE("ball validation") {
  CHECK_NOTHROW(validate_ball(kUnitDisk));
  CHECK_THROWS_AS(validate_ball(Ball{{}, 1.0}), Error);
  CHECK_THROWS_AS(validate_ball(Ball{{0.0}, 0.0}), Error);
  CHECK_THROWS_AS(validate_ball(Ball{{0.0}, -1.0}), Error);
  CHECK_THROWS_AS(validate_ball(Ball{{std::nan("")}, 1.0}), Error);
}
