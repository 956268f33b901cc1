#include "ballproj/projection.hpp"

#include <algorithm>
#include <cmath>

namespace ballproj {

void validate_ball(const Ball& b) {
  if (b.center.empty()) {
    throw Error(Errc::InvalidArgument, "ball center must have dimension >= 1");
  }
  if (!all_finite(b.center)) {
    throw Error(Errc::InvalidArgument, "ball center has non-finite coordinates");
  }
  if (!std::isfinite(b.radius) || b.radius <= 0.0) {
    throw Error(Errc::InvalidArgument, "ball radius must be positive and finite");
  }
}

const char* to_string(RegionTag t) noexcept {
  switch (t) {
    case RegionTag::Interior: return "interior";
    case RegionTag::Boundary: return "boundary";
    case RegionTag::Exterior: return "exterior";
  }
  return "unknown";
}

const char* to_string(DirectionClass d) noexcept {
  return d == DirectionClass::Up ? "up" : "down";
}

Region classify(const Ball& b, const Vector& x, double tol) {
  if (tol <= 0.0) {
    throw Error(Errc::InvalidArgument, "classification tolerance must be > 0");
  }
  const double gap = distance(x, b.center) - b.radius;
  const double tol_abs = tol * std::max(1.0, b.radius);
  Region r;
  r.signed_gap = gap;
  if (gap < -tol_abs) {
    r.tag = RegionTag::Interior;
  } else if (gap > tol_abs) {
    r.tag = RegionTag::Exterior;
  } else {
    r.tag = RegionTag::Boundary;
  }
  return r;
}

Vector project(const Ball& b, const Vector& x) {
  const double n = distance(x, b.center);
  if (n <= b.radius) return x;
  const double f = b.radius / n;
  const std::size_t dim = x.size();
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out[i] = b.center[i] + f * (x[i] - b.center[i]);
  }
  return out;
}

DirectionClass direction_class(const Ball& b, const Vector& x, const Vector& v,
                               double tol) {
  if (classify(b, x, tol).tag != RegionTag::Boundary) {
    throw Error(Errc::NotBoundary,
                "direction_class: point is not on the ball boundary");
  }
  dim_match(x, v);
  if (is_zero(v)) {
    throw Error(Errc::ZeroDirection, "direction_class: direction is zero");
  }
  // ||x-c+tv||^2 - r^2 = 2t<x-c,v> + t^2||v||^2, so the sign of <x-c,v>
  // decides for small t; the tie <x-c,v> = 0 leaves the ball (t^2 term).
  return inner(sub(x, b.center), v) >= 0.0 ? DirectionClass::Up
                                           : DirectionClass::Down;
}

}  // namespace ballproj
