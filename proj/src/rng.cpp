#include "ballproj/rng.hpp"

#include <cmath>

namespace ballproj {

double Rng::uniform01() {
  // 53 uniform mantissa bits in [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double Rng::normal() {
  // Box-Muller; u1 in (0, 1] keeps the log finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double two_pi = 6.28318530717958647692;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

int Rng::uniform_int(int lo, int hi) {
  const int span = hi - lo + 1;
  int k = lo + static_cast<int>(uniform01() * span);
  if (k > hi) k = hi;
  return k;
}

Vector Rng::normal_vector(std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Vector Rng::unit_vector(std::size_t n) {
  for (;;) {
    Vector v = normal_vector(n);
    const double len = norm(v);
    if (len > 1e-8) return scaled(v, 1.0 / len);
  }
}

Vector Rng::box_vector(std::size_t n, double lo, double hi) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = uniform(lo, hi);
  return v;
}

}  // namespace ballproj
