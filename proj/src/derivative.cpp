#include "ballproj/derivative.hpp"

#include <cmath>

namespace ballproj {

Vector apply_linear(const LinearMapSpec& map, const Vector& u) {
  if (map.kind == LinearMapSpec::Kind::Identity) return u;
  dim_match(map.axis, u);
  const double n2 = inner(map.axis, map.axis);
  const double coef = inner(map.axis, u) / n2;
  return scaled(sub(u, scaled(map.axis, coef)), map.scale);
}

LinearMapSpec frechet_map(const Ball& b, const Vector& x, double tol) {
  const Region reg = classify(b, x, tol);
  LinearMapSpec map;
  switch (reg.tag) {
    case RegionTag::Interior:
      map.kind = LinearMapSpec::Kind::Identity;
      return map;
    case RegionTag::Exterior: {
      Vector s = sub(x, b.center);
      map.kind = LinearMapSpec::Kind::ScaledOrthoProjector;
      map.scale = b.radius / norm(s);
      map.axis = std::move(s);
      return map;
    }
    case RegionTag::Boundary:
      break;
  }
  throw Error(Errc::NotDifferentiable,
              "projection is not differentiable at boundary points");
}

Vector gateaux(const Ball& b, const Vector& x, const Vector& u, double tol) {
  dim_match(x, u);
  const Region reg = classify(b, x, tol);
  switch (reg.tag) {
    case RegionTag::Interior:
      return u;
    case RegionTag::Exterior: {
      const Vector s = sub(x, b.center);
      const double n2 = inner(s, s);
      const double coef = inner(s, u) / n2;
      return scaled(sub(u, scaled(s, coef)), b.radius / std::sqrt(n2));
    }
    case RegionTag::Boundary: {
      if (is_zero(u)) return u;  // zero direction, Down convention
      const Vector s = sub(x, b.center);
      const double ip = inner(s, u);
      if (ip >= 0.0) {
        // Up: flatten the radial component.
        return sub(u, scaled(s, ip / (b.radius * b.radius)));
      }
      return u;  // Down: identity
    }
  }
  throw Error(Errc::InvalidArgument, "unreachable region tag");
}

Vector graphical(const Ball& b, const Vector& x, const Vector& y, double tol) {
  return gateaux(b, x, y, tol);
}

}  // namespace ballproj
