#pragma once

#include "ballproj/projection.hpp"

namespace ballproj {

// Derivative of project() where it is (Frechet) differentiable: the identity
// inside the ball, and outside a scaled projector onto the orthogonal
// complement of axis = x - c:
//   u  |->  scale * (u - <axis,u>/||axis||^2 axis),   scale = radius/||x-c||.
// The map is self-adjoint and kills the axis direction.
struct LinearMapSpec {
  enum class Kind { Identity, ScaledOrthoProjector };
  Kind kind = Kind::Identity;
  double scale = 1.0;  // ScaledOrthoProjector only
  Vector axis;         // ScaledOrthoProjector only; nonzero
};

Vector apply_linear(const LinearMapSpec& map, const Vector& u);

// Throws Errc::NotDifferentiable at boundary points, where the projection has
// no single-valued derivative.
LinearMapSpec frechet_map(const Ball& b, const Vector& x,
                          double tol = kClassifyTolDefault);

// One-sided directional derivative of project() at x along u:
//   interior:  u
//   exterior:  (r/||x-c||) (u - <x-c,u>/||x-c||^2 (x-c))
//   boundary:  u - <x-c,u>/r^2 (x-c)  for Up directions, u for Down ones.
// At boundary points u = 0 returns 0 (Down convention).
Vector gateaux(const Ball& b, const Vector& x, const Vector& u,
               double tol = kClassifyTolDefault);

// Graphical derivative. Single-valued and equal to gateaux() because the
// projection is globally Lipschitz; delegates to the same code path.
Vector graphical(const Ball& b, const Vector& x, const Vector& y,
                 double tol = kClassifyTolDefault);

}  // namespace ballproj
