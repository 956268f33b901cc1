#include "ballproj/oracle.hpp"

#include <cmath>
#include <limits>

#include "ballproj/rng.hpp"

namespace ballproj {

const char* to_string(OracleVerdict v) noexcept {
  return v == OracleVerdict::ConsistentMember ? "consistent_member"
                                              : "certified_non_member";
}

namespace {

void validate_decreasing(const std::vector<double>& xs, const char* what) {
  if (xs.empty()) {
    throw Error(Errc::InvalidArgument, std::string(what) + " must be nonempty");
  }
  double prev = std::numeric_limits<double>::infinity();
  for (double x : xs) {
    if (!(x > 0.0) || !(x < prev)) {
      throw Error(Errc::InvalidArgument,
                  std::string(what) + " must be strictly decreasing and positive");
    }
    prev = x;
  }
}

Vector basis_vector(std::size_t dim, std::size_t i, double sign) {
  Vector e = zeros(dim);
  e[i] = sign;
  return e;
}

}  // namespace

std::vector<Vector> sample_directions(std::size_t dim,
                                      const SamplingScheme& scheme,
                                      const Vector& radial_axis) {
  if (dim == 0) {
    throw Error(Errc::InvalidArgument, "direction sampling needs dim >= 1");
  }
  if (scheme.num_directions <= 0) {
    throw Error(Errc::InvalidArgument, "num_directions must be positive");
  }
  // In one dimension every unit direction is +-1.
  if (dim == 1) return {Vector{1.0}, Vector{-1.0}};

  std::vector<Vector> dirs;
  dirs.reserve(static_cast<std::size_t>(scheme.num_directions) + 2 * dim + 18);
  for (std::size_t i = 0; i < dim; ++i) {
    dirs.push_back(basis_vector(dim, i, 1.0));
    dirs.push_back(basis_vector(dim, i, -1.0));
  }

  Rng rng(scheme.seed ^ (0x9e3779b97f4a7c15ULL * (dim + 1)));
  const bool have_axis =
      radial_axis.size() == dim && !is_zero(radial_axis);
  if (have_axis) {
    const Vector ra = scaled(radial_axis, 1.0 / norm(radial_axis));
    dirs.push_back(ra);
    dirs.push_back(scaled(ra, -1.0));
    // Probes orthogonal to the radial axis.
    int pairs = 0;
    for (int attempt = 0; attempt < 64 && pairs < 8; ++attempt) {
      const Vector d = rng.normal_vector(dim);
      const Vector o = ortho_split(radial_axis, d).ortho;
      const double len = norm(o);
      if (len <= 1e-9 * std::max(1.0, norm(d))) continue;
      dirs.push_back(scaled(o, 1.0 / len));
      dirs.push_back(scaled(o, -1.0 / len));
      ++pairs;
    }
  }
  while (dirs.size() < static_cast<std::size_t>(scheme.num_directions)) {
    dirs.push_back(rng.unit_vector(dim));
  }
  return dirs;
}

LimsupReport limsup_quotient(const Ball& b, const Vector& xbar,
                             const Vector& y, const Vector& z,
                             const SamplingScheme& scheme) {
  const std::size_t dim = dim_match(xbar, y);
  dim_match(xbar, z);
  dim_match(xbar, b.center);
  validate_decreasing(scheme.radii, "sampling radii");

  const Vector p_bar = project(b, xbar);
  const std::vector<Vector> dirs =
      sample_directions(dim, scheme, sub(xbar, b.center));

  LimsupReport report;
  report.per_radius.reserve(scheme.radii.size());
  for (double radius : scheme.radii) {
    RadiusStat stat;
    stat.radius = radius;
    stat.max_quotient = -std::numeric_limits<double>::infinity();
    for (const Vector& d : dirs) {
      const Vector u = axpy(radius, d, xbar);
      // Use the realized increment so numerator and denominator agree.
      const Vector du = sub(u, xbar);
      const double den = norm(du);
      if (den == 0.0) continue;
      const Vector dp = sub(project(b, u), p_bar);
      const double q = (inner(z, du) - inner(y, dp)) / den;
      if (q > stat.max_quotient) {
        stat.max_quotient = q;
        stat.argmax_direction = d;
      }
    }
    report.per_radius.push_back(std::move(stat));
  }

  const RadiusStat& finest = report.per_radius.back();
  if (finest.max_quotient > scheme.witness_threshold) {
    report.verdict = OracleVerdict::CertifiedNonMember;
    report.witness = OracleWitness{finest.argmax_direction, finest.radius,
                                   finest.max_quotient};
  } else {
    report.verdict = OracleVerdict::ConsistentMember;
  }
  double finest_two = finest.max_quotient;
  if (report.per_radius.size() >= 2) {
    finest_two = std::max(
        finest_two, report.per_radius[report.per_radius.size() - 2].max_quotient);
  }
  report.strong_member_evidence =
      report.verdict == OracleVerdict::ConsistentMember &&
      finest_two <= scheme.member_threshold;
  return report;
}

std::vector<double> default_t_schedule() {
  return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
}

std::vector<double> contingent_t_schedule() {
  return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
}

FdReport fd_directional(const Ball& b, const Vector& x, const Vector& u,
                        const std::vector<double>& t_schedule) {
  dim_match(x, u);
  validate_decreasing(t_schedule, "t schedule");
  const Vector p_x = project(b, x);

  std::vector<Vector> quotients;
  quotients.reserve(t_schedule.size());
  for (double t : t_schedule) {
    quotients.push_back(scaled(sub(project(b, axpy(t, u, x)), p_x), 1.0 / t));
  }

  FdReport report;
  report.estimate = quotients.back();
  report.deviations.reserve(t_schedule.size());
  for (std::size_t i = 0; i < t_schedule.size(); ++i) {
    report.deviations.emplace_back(t_schedule[i],
                                   distance(quotients[i], report.estimate));
  }
  return report;
}

bool contingent_member(const Ball& b, const Vector& xbar, const Vector& v,
                       const Vector& w, const std::vector<double>& t_schedule,
                       double threshold) {
  dim_match(xbar, v);
  dim_match(xbar, w);
  validate_decreasing(t_schedule, "t schedule");
  const Vector p_bar = project(b, xbar);

  // The difference quotient carries a roundoff floor of order eps*scale/t,
  // which grows as t shrinks; the decrease check must allow for it.
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max({1.0, norm(xbar), norm(v), norm(w)});
  double prev = std::numeric_limits<double>::infinity();
  double err = prev;
  for (double t : t_schedule) {
    const Vector q = scaled(sub(project(b, axpy(t, v, xbar)), p_bar), 1.0 / t);
    err = distance(q, w);
    if (err > prev + 100.0 * eps * scale / t) return false;
    prev = err;
  }
  return err <= threshold;
}

}  // namespace ballproj
