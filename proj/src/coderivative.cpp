#include "ballproj/coderivative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ballproj {

CoderivativeSet CoderivativeSet::make_empty() { return CoderivativeSet{}; }

CoderivativeSet CoderivativeSet::make_singleton(Vector v) {
  CoderivativeSet s;
  s.tag = Tag::Singleton;
  s.value = std::move(v);
  return s;
}

CoderivativeSet CoderivativeSet::make_segment(Vector anchor, Vector axis,
                                              double lo, double hi) {
  if (is_zero(axis)) {
    throw Error(Errc::InvalidArgument, "segment axis must be nonzero");
  }
  dim_match(anchor, axis);
  if (!(lo <= hi)) {
    throw Error(Errc::InvalidArgument, "segment requires lo <= hi");
  }
  if (lo == hi) {
    return make_singleton(sub(anchor, scaled(axis, lo)));
  }
  CoderivativeSet s;
  s.tag = Tag::Segment;
  s.anchor = std::move(anchor);
  s.axis = std::move(axis);
  s.lo = lo;
  s.hi = hi;
  return s;
}

Vector CoderivativeSet::point_at(double t) const {
  if (tag != Tag::Segment) {
    throw Error(Errc::InvalidArgument, "point_at requires a segment");
  }
  return sub(anchor, scaled(axis, t));
}

std::pair<Vector, Vector> CoderivativeSet::endpoints() const {
  return {point_at(hi), point_at(lo)};
}

CoderivativeSet regular_coderivative(const Ball& b, const Vector& xbar,
                                     const Vector& y, double tol) {
  dim_match(xbar, y);
  const Region reg = classify(b, xbar, tol);
  switch (reg.tag) {
    case RegionTag::Interior:
      return CoderivativeSet::make_singleton(y);
    case RegionTag::Exterior:
      return CoderivativeSet::make_singleton(
          apply_linear(frechet_map(b, xbar, tol), y));
    case RegionTag::Boundary: {
      Vector s = sub(xbar, b.center);
      const double ip = inner(y, s);
      if (ip > 0.0) return CoderivativeSet::make_empty();
      return CoderivativeSet::make_segment(y, std::move(s),
                                           ip / (b.radius * b.radius), 0.0);
    }
  }
  throw Error(Errc::InvalidArgument, "unreachable region tag");
}

CoderivativeSet segment_from_endpoints(const Vector& p, const Vector& q) {
  if (distance(p, q) == 0.0) return CoderivativeSet::make_singleton(p);
  return CoderivativeSet::make_segment(p, sub(p, q), 0.0, 1.0);
}

double set_distance(const CoderivativeSet& s, const Vector& z) {
  switch (s.tag) {
    case CoderivativeSet::Tag::Empty:
      return std::numeric_limits<double>::infinity();
    case CoderivativeSet::Tag::Singleton:
      return distance(z, s.value);
    case CoderivativeSet::Tag::Segment: {
      const double t_free = inner(sub(s.anchor, z), s.axis) / inner(s.axis, s.axis);
      const double t = std::clamp(t_free, s.lo, s.hi);
      return distance(z, s.point_at(t));
    }
  }
  return std::numeric_limits<double>::infinity();
}

bool set_membership(const CoderivativeSet& s, const Vector& z, double eps) {
  if (s.is_empty()) return false;
  return set_distance(s, z) <= eps;
}

namespace {
double default_set_eps(const CoderivativeSet& s) {
  double scale = 1.0;
  if (s.is_singleton()) scale = std::max(scale, norm(s.value));
  if (s.is_segment()) {
    scale = std::max({scale, norm(s.anchor), norm(s.axis)});
  }
  return 1e-9 * scale;
}
}  // namespace

bool set_membership(const CoderivativeSet& s, const Vector& z) {
  return set_membership(s, z, default_set_eps(s));
}

bool set_equal(const CoderivativeSet& a, const CoderivativeSet& b, double eps) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case CoderivativeSet::Tag::Empty:
      return true;
    case CoderivativeSet::Tag::Singleton:
      return a.value.size() == b.value.size() &&
             distance(a.value, b.value) <= eps;
    case CoderivativeSet::Tag::Segment: {
      if (a.anchor.size() != b.anchor.size()) return false;
      const auto [a1, a2] = a.endpoints();
      const auto [b1, b2] = b.endpoints();
      const bool same = distance(a1, b1) <= eps && distance(a2, b2) <= eps;
      const bool swapped = distance(a1, b2) <= eps && distance(a2, b1) <= eps;
      return same || swapped;
    }
  }
  return false;
}

bool set_equal(const CoderivativeSet& a, const CoderivativeSet& b) {
  return set_equal(a, b, std::max(default_set_eps(a), default_set_eps(b)));
}

bool zero_in_coderivative(const Ball& b, const Vector& xbar, const Vector& y,
                          double tol) {
  if (classify(b, xbar, tol).tag != RegionTag::Boundary) {
    throw Error(Errc::NotBoundary,
                "zero_in_coderivative: point is not on the ball boundary");
  }
  dim_match(xbar, y);
  if (is_zero(y)) return true;  // the set is {0}
  const Vector s = sub(xbar, b.center);
  const OrthoSplit split = ortho_split(s, y);
  const bool parallel = norm(split.ortho) <= tol * std::max(1.0, norm(y));
  return parallel && inner(y, s) <= 0.0;
}

BoundarySpecialChecks coderivative_special(const Ball& b, const Vector& xbar,
                                           double tol) {
  if (classify(b, xbar, tol).tag != RegionTag::Boundary) {
    throw Error(Errc::NotBoundary,
                "coderivative_special: point is not on the ball boundary");
  }
  BoundarySpecialChecks checks;
  const CoderivativeSet at_zero =
      regular_coderivative(b, xbar, zeros(xbar.size()), tol);
  checks.zero_gives_zero_singleton =
      at_zero.is_singleton() && norm(at_zero.value) <= tol;
  const CoderivativeSet at_radial =
      regular_coderivative(b, xbar, sub(xbar, b.center), tol);
  checks.radial_gives_empty = at_radial.is_empty();
  return checks;
}

}  // namespace ballproj
