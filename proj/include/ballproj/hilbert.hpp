#pragma once

#include <cstddef>
#include <vector>

#include "ballproj/errors.hpp"

namespace ballproj {

// Point or direction in R^n. Dimension is a runtime property; operations on
// mixed dimensions throw Errc::DimensionMismatch. Coordinates are expected to
// be finite; inputs crossing the CLI boundary are validated.
using Vector = std::vector<double>;

// Returns the common dimension or throws on mismatch.
std::size_t dim_match(const Vector& u, const Vector& v);

double inner(const Vector& u, const Vector& v);
double norm(const Vector& u);
double distance(const Vector& u, const Vector& v);

Vector zeros(std::size_t n);
bool is_zero(const Vector& u);
bool all_finite(const Vector& u);

Vector add(const Vector& u, const Vector& v);
Vector sub(const Vector& u, const Vector& v);
Vector scaled(const Vector& u, double a);
// a*x + y
Vector axpy(double a, const Vector& x, const Vector& y);

// Decomposition of u against a nonzero reference x:
//   u = along * x + ortho,   <x, ortho> = 0,
// with along = <x, u> / ||x||^2. Both components are linear in u.
struct OrthoSplit {
  double along = 0.0;
  Vector ortho;
};

// Throws Errc::ZeroReference if x is the zero vector.
OrthoSplit ortho_split(const Vector& x, const Vector& u);

}  // namespace ballproj
