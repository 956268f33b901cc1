#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ballproj/projection.hpp"

namespace ballproj {

// Definition-level numerical verifiers. Everything here is built on
// project() alone and stays independent of the closed-form derivative and
// coderivative code paths it is used to check.

// Probe layout for the sampled limsup quotient at xbar: every +-coordinate
// axis, the +-radial axis (x - c, normalized) with a handful of directions
// orthogonal to it, then seeded pseudo-random unit directions up to
// num_directions total. The radial and orthogonal probes are the directions
// that expose each constraint of the boundary coderivative, so they are
// always present. Deterministic given (dim, num_directions, seed) and the
// radial axis.
struct SamplingScheme {
  int num_directions = 64;
  // Strictly decreasing sampling radii for u = xbar + radius * direction.
  std::vector<double> radii{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  std::uint64_t seed = 0;
  // Evidence bar: membership is consistent when the max quotient over the two
  // finest radii stays below this.
  double member_threshold = 1e-5;
  // Certificate bar: a quotient above this at the finest radius contradicts
  // limsup <= 0 up to discretization and certifies non-membership.
  double witness_threshold = 1e-4;
};

enum class OracleVerdict { ConsistentMember, CertifiedNonMember };
const char* to_string(OracleVerdict v) noexcept;

struct RadiusStat {
  double radius = 0.0;
  double max_quotient = 0.0;
  Vector argmax_direction;
};

struct OracleWitness {
  Vector direction;
  double radius = 0.0;
  double quotient = 0.0;
};

// Verdict semantics are one-sided: ConsistentMember is evidence, a witness is
// a certificate. Quotients in the dead band between the two thresholds leave
// the verdict at ConsistentMember with strong_member_evidence = false.
struct LimsupReport {
  std::vector<RadiusStat> per_radius;  // in scheme order (decreasing radius)
  OracleVerdict verdict = OracleVerdict::ConsistentMember;
  std::optional<OracleWitness> witness;  // present iff CertifiedNonMember
  bool strong_member_evidence = false;
};

std::vector<Vector> sample_directions(std::size_t dim,
                                      const SamplingScheme& scheme,
                                      const Vector& radial_axis);

// Samples the quotient
//   ( <z, u - xbar> - <y, P(u) - P(xbar)> ) / ||u - xbar||
// over u = xbar + radius * direction. limsup <= 0 over u -> xbar
// characterizes z as an element of the regular coderivative at y.
LimsupReport limsup_quotient(const Ball& b, const Vector& xbar,
                             const Vector& y, const Vector& z,
                             const SamplingScheme& scheme = {});

std::vector<double> default_t_schedule();     // {1e-2, ..., 1e-6}
std::vector<double> contingent_t_schedule();  // {1e-2, ..., 1e-8}

// Forward difference quotients (P(x + t u) - P(x)) / t along a strictly
// decreasing schedule. estimate is the quotient at the smallest t;
// deviations holds (t, ||quotient(t) - estimate||) for every t.
struct FdReport {
  Vector estimate;
  std::vector<std::pair<double, double>> deviations;
};

FdReport fd_directional(const Ball& b, const Vector& x, const Vector& u,
                        const std::vector<double>& t_schedule = default_t_schedule());

// True iff (v, w) is tangent to the graph of project() at xbar in the
// difference-quotient sense: ||(P(xbar + t v) - P(xbar))/t - w|| decreases
// monotonically along the schedule and ends below threshold.
bool contingent_member(const Ball& b, const Vector& xbar, const Vector& v,
                       const Vector& w,
                       const std::vector<double>& t_schedule = contingent_t_schedule(),
                       double threshold = 1e-6);

}  // namespace ballproj
