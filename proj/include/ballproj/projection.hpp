#pragma once

#include "ballproj/hilbert.hpp"

namespace ballproj {

// Classification tolerance, relative to max(1, radius). The derivative and
// coderivative formulas jump across the interior/boundary/exterior split, so
// callers that work near the sphere should pick this deliberately.
inline constexpr double kClassifyTolDefault = 1e-9;

// Closed ball { x : ||x - center|| <= radius }, radius > 0.
struct Ball {
  Vector center;
  double radius = 1.0;
};

// Throws Errc::InvalidArgument on non-finite center, empty center, or
// radius <= 0. Library entry points assume a valid ball; the CLI validates.
void validate_ball(const Ball& b);

enum class RegionTag { Interior, Boundary, Exterior };
const char* to_string(RegionTag t) noexcept;

struct Region {
  RegionTag tag = RegionTag::Interior;
  double signed_gap = 0.0;  // ||x - center|| - radius
};

// Trichotomy under floating point: |gap| <= tol * max(1, radius) is Boundary.
Region classify(const Ball& b, const Vector& x, double tol = kClassifyTolDefault);

// Nearest point of the ball. Points already in the ball are returned bitwise
// unchanged; outside, the result is center + (radius/||x-c||) (x-c).
Vector project(const Ball& b, const Vector& x);

// At a boundary point x, Up collects directions v along which the point does
// not re-enter the ball for small steps (<x-c, v> >= 0; tangents count as Up
// since ||x-c+tv||^2 = r^2 + 2t<x-c,v> + t^2||v||^2 stays >= r^2), Down the
// complement. Up and Down partition the nonzero directions.
enum class DirectionClass { Up, Down };
const char* to_string(DirectionClass d) noexcept;

// Throws Errc::NotBoundary unless classify(b, x, tol) is Boundary and
// Errc::ZeroDirection for v = 0.
DirectionClass direction_class(const Ball& b, const Vector& x, const Vector& v,
                               double tol = kClassifyTolDefault);

}  // namespace ballproj
