#include "ballproj/hilbert.hpp"

#include <cmath>
#include <string>

namespace ballproj {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DimensionMismatch: return "dimension_mismatch";
    case Errc::ZeroReference: return "zero_reference";
    case Errc::ZeroDirection: return "zero_direction";
    case Errc::NotBoundary: return "not_boundary";
    case Errc::NotDifferentiable: return "not_differentiable";
    case Errc::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

std::size_t dim_match(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw Error(Errc::DimensionMismatch,
                "dimension mismatch: " + std::to_string(u.size()) + " vs " +
                    std::to_string(v.size()));
  }
  return u.size();
}

double inner(const Vector& u, const Vector& v) {
  const std::size_t n = dim_match(u, v);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += u[i] * v[i];
  return s;
}

double norm(const Vector& u) { return std::sqrt(inner(u, u)); }

double distance(const Vector& u, const Vector& v) { return norm(sub(u, v)); }

Vector zeros(std::size_t n) { return Vector(n, 0.0); }

bool is_zero(const Vector& u) {
  for (double c : u) {
    if (c != 0.0) return false;
  }
  return true;
}

bool all_finite(const Vector& u) {
  for (double c : u) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

Vector add(const Vector& u, const Vector& v) {
  const std::size_t n = dim_match(u, v);
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = u[i] + v[i];
  return out;
}

Vector sub(const Vector& u, const Vector& v) {
  const std::size_t n = dim_match(u, v);
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = u[i] - v[i];
  return out;
}

Vector scaled(const Vector& u, double a) {
  Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i];
  return out;
}

Vector axpy(double a, const Vector& x, const Vector& y) {
  const std::size_t n = dim_match(x, y);
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + y[i];
  return out;
}

OrthoSplit ortho_split(const Vector& x, const Vector& u) {
  const double nx2 = inner(x, x);
  if (nx2 == 0.0) {
    throw Error(Errc::ZeroReference, "ortho_split: reference vector is zero");
  }
  dim_match(x, u);
  OrthoSplit split;
  split.along = inner(x, u) / nx2;
  split.ortho = sub(u, scaled(x, split.along));
  return split;
}

}  // namespace ballproj
