#pragma once

#include <cstdint>
#include <random>

#include "ballproj/hilbert.hpp"

namespace ballproj {

// Deterministic pseudo-random source. The distributions are hand-rolled on
// top of mt19937_64 (whose output sequence is pinned by the standard) so that
// a given seed produces the same samples under every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // [0, 1)
  double uniform01();
  double uniform(double a, double b);
  // Standard normal via Box-Muller.
  double normal();
  // Inclusive range.
  int uniform_int(int lo, int hi);

  Vector normal_vector(std::size_t n);
  Vector unit_vector(std::size_t n);
  Vector box_vector(std::size_t n, double lo, double hi);

 private:
  std::mt19937_64 gen_;
};

}  // namespace ballproj
