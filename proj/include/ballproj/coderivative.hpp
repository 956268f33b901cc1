#pragma once

#include <utility>

#include "ballproj/derivative.hpp"

namespace ballproj {

// One value of the regular coderivative map: nothing, a single point, or the
// closed segment { anchor - t*axis : t in [lo, hi] }.
struct CoderivativeSet {
  enum class Tag { Empty, Singleton, Segment };

  Tag tag = Tag::Empty;
  Vector value;   // Singleton
  Vector anchor;  // Segment
  Vector axis;    // Segment; nonzero
  double lo = 0.0;
  double hi = 0.0;

  static CoderivativeSet make_empty();
  static CoderivativeSet make_singleton(Vector v);
  // Requires lo <= hi and a nonzero axis; a degenerate range (lo == hi)
  // collapses to the singleton at that point.
  static CoderivativeSet make_segment(Vector anchor, Vector axis, double lo,
                                      double hi);

  bool is_empty() const { return tag == Tag::Empty; }
  bool is_singleton() const { return tag == Tag::Singleton; }
  bool is_segment() const { return tag == Tag::Segment; }

  // Segment point anchor - t*axis.
  Vector point_at(double t) const;
  // Segment endpoints (point_at(hi), point_at(lo)); for the boundary
  // coderivative these are (y, component of y orthogonal to x-c).
  std::pair<Vector, Vector> endpoints() const;
};

// Regular coderivative of project() at xbar applied to y:
//   interior:  { y }
//   exterior:  { scaled ortho projector applied to y }
//   boundary:  { z : <y,s> <= <z,s> <= 0, y - z parallel to s },  s = xbar - c.
// The parallelism constraint pins z to the line z = y - t*s and the inequality
// chain pins t to [<y,s>/r^2, 0], so the boundary value is the segment with
// anchor y and axis s, empty exactly when <y,s> > 0, and the singleton {y}
// when <y,s> = 0.
CoderivativeSet regular_coderivative(const Ball& b, const Vector& xbar,
                                     const Vector& y,
                                     double tol = kClassifyTolDefault);

// Set with the given endpoints; a singleton when they coincide.
CoderivativeSet segment_from_endpoints(const Vector& p, const Vector& q);

// Euclidean distance from z to the set; +infinity for the empty set.
double set_distance(const CoderivativeSet& s, const Vector& z);

bool set_membership(const CoderivativeSet& s, const Vector& z, double eps);
// eps = 1e-9 scaled by max(1, ||value or anchor||, ||axis||).
bool set_membership(const CoderivativeSet& s, const Vector& z);

// Geometric comparison: tags must agree, singleton values within eps, segment
// endpoint pairs within eps up to order. Parametrizations are not compared.
bool set_equal(const CoderivativeSet& a, const CoderivativeSet& b, double eps);
bool set_equal(const CoderivativeSet& a, const CoderivativeSet& b);

// Closed-form test for 0 being an element of the boundary coderivative at y:
// y must be a multiple of s = xbar - c with <y, s> <= 0. Throws
// Errc::NotBoundary away from the sphere.
bool zero_in_coderivative(const Ball& b, const Vector& xbar, const Vector& y,
                          double tol = kClassifyTolDefault);

// Degenerate boundary inputs with a fixed expected outcome:
// y = 0 maps to {0}, and y = xbar - c (the outward radial direction) to the
// empty set. coderivative_special() evaluates both at a boundary point.
struct BoundarySpecialChecks {
  bool zero_gives_zero_singleton = false;
  bool radial_gives_empty = false;
  bool all() const { return zero_gives_zero_singleton && radial_gives_empty; }
};

BoundarySpecialChecks coderivative_special(const Ball& b, const Vector& xbar,
                                           double tol = kClassifyTolDefault);

}  // namespace ballproj
