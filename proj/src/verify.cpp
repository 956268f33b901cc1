#include "ballproj/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ballproj/json_io.hpp"
#include "ballproj/rng.hpp"

namespace ballproj::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void fail(SuiteResult& r, const std::string& note) {
  ++r.failures;
  if (r.failure_notes.size() < 10) r.failure_notes.push_back(note);
}

void diagnose(SuiteResult& r, const std::string& note) {
  if (r.diagnostics.size() < 10) r.diagnostics.push_back(note);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string describe(const Ball& b, const Vector& xbar, const Vector& y) {
  std::string s = "dim=" + std::to_string(xbar.size()) +
                  " r=" + fmt(b.radius) + " gap=" +
                  fmt(distance(xbar, b.center) - b.radius) + " <y,s>=" +
                  fmt(inner(y, sub(xbar, b.center)));
  return s;
}

// Random instance helpers. All draws go through one Rng so a seed pins the
// whole suite.
Ball random_ball(Rng& rng, std::size_t dim) {
  return Ball{rng.box_vector(dim, -2.0, 2.0), rng.uniform(0.5, 2.0)};
}

Vector interior_point(Rng& rng, const Ball& b) {
  const std::size_t dim = b.center.size();
  return axpy(rng.uniform(0.0, 0.7) * b.radius, rng.unit_vector(dim), b.center);
}

Vector exterior_point(Rng& rng, const Ball& b) {
  const std::size_t dim = b.center.size();
  return axpy(b.radius + rng.uniform(0.1, 2.0), rng.unit_vector(dim), b.center);
}

Vector boundary_point(Rng& rng, const Ball& b) {
  const std::size_t dim = b.center.size();
  return axpy(b.radius, rng.unit_vector(dim), b.center);
}

Vector nonzero_box(Rng& rng, std::size_t dim, double lo, double hi) {
  Vector v = rng.box_vector(dim, lo, hi);
  if (is_zero(v)) v[0] = 1.0;
  return v;
}

}  // namespace

SuiteResult check_coderivative_table_1d() {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "coderivative_1d_table";
  const Ball b{{0.0}, 1.0};
  const double xs[] = {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0};
  const double ys[] = {-3.0, -1.0, 0.0, 1.0, 3.0};
  for (double x : xs) {
    for (double y : ys) {
      ++r.checks;
      const CoderivativeSet got = regular_coderivative(b, {x}, {y});
      CoderivativeSet want;
      if (std::abs(x) < 1.0) {
        want = CoderivativeSet::make_singleton({y});
      } else if (std::abs(x) > 1.0) {
        want = CoderivativeSet::make_singleton({0.0});
      } else if (x == 1.0) {
        want = y > 0.0 ? CoderivativeSet::make_empty()
                       : segment_from_endpoints({y}, {0.0});
      } else {  // x == -1
        want = y < 0.0 ? CoderivativeSet::make_empty()
                       : segment_from_endpoints({0.0}, {y});
      }
      if (!set_equal(got, want, 1e-12)) {
        fail(r, "coderivative table mismatch at x=" + fmt(x) + " y=" + fmt(y));
      }
    }
  }
  r.elapsed_s = seconds_since(t0);
  return r;
}

SuiteResult check_graphical_table_1d() {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "graphical_1d_table";
  const Ball b{{0.0}, 1.0};
  const double xs[] = {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0};
  const double ys[] = {-3.0, -1.0, 0.0, 1.0, 3.0};
  for (double x : xs) {
    for (double y : ys) {
      ++r.checks;
      const Vector got = graphical(b, {x}, {y});
      double want = 0.0;
      if (std::abs(x) < 1.0) {
        want = y;
      } else if (std::abs(x) > 1.0) {
        want = 0.0;
      } else if (x == 1.0) {
        want = y >= 0.0 ? 0.0 : y;
      } else {  // x == -1
        want = y <= 0.0 ? 0.0 : y;
      }
      if (std::abs(got[0] - want) > 1e-12) {
        fail(r, "graphical table mismatch at x=" + fmt(x) + " y=" + fmt(y) +
                    ": got " + fmt(got[0]) + " want " + fmt(want));
      }
    }
  }
  r.elapsed_s = seconds_since(t0);
  return r;
}

SuiteResult check_fixed_cases() {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "fixed_cases";
  auto expect = [&](bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) fail(r, what);
  };

  const Ball line{{0.0}, 1.0};
  expect(set_equal(regular_coderivative(line, {1.0}, {-2.0}),
                   segment_from_endpoints({-2.0}, {0.0}), 1e-12),
         "1d boundary coderivative at y=-2 is the segment [-2, 0]");
  expect(regular_coderivative(line, {1.0}, {2.0}).is_empty(),
         "1d boundary coderivative at y=2 is empty");
  expect(std::abs(graphical(line, {1.0}, {-3.0})[0] - (-3.0)) <= 1e-12,
         "1d graphical derivative at y=-3 is y");
  expect(std::abs(graphical(line, {1.0}, {3.0})[0]) <= 1e-12,
         "1d graphical derivative at y=3 is 0");

  const Ball disk{{0.0, 0.0}, 1.0};
  expect(set_equal(regular_coderivative(disk, {1.0, 0.0}, {-1.0, 1.0}),
                   segment_from_endpoints({-1.0, 1.0}, {0.0, 1.0}), 1e-12),
         "2d boundary coderivative endpoints are y and its orthogonal part");
  expect(set_equal(regular_coderivative(disk, {0.0, 2.0}, {1.0, 1.0}),
                   CoderivativeSet::make_singleton({0.5, 0.0}), 1e-12),
         "2d exterior coderivative value");

  expect(coderivative_special(disk, {1.0, 0.0}).all(),
         "boundary degeneracies: {0} at y=0 and empty at the radial y");
  {
    const CoderivativeSet s = regular_coderivative(disk, {1.0, 0.0}, {-0.5, 0.0});
    expect(s.is_segment() && set_membership(s, zeros(2), 1e-12),
           "inward radial y produces a segment through 0");
    expect(zero_in_coderivative(disk, {1.0, 0.0}, {-0.5, 0.0}),
           "closed-form 0-membership holds for inward radial y");
    expect(!zero_in_coderivative(disk, {1.0, 0.0}, {-0.5, 0.3}),
           "closed-form 0-membership fails off the radial line");
  }

  expect(frechet_map(disk, {0.2, 0.0}).kind == LinearMapSpec::Kind::Identity,
         "interior derivative map is the identity");
  {
    const LinearMapSpec m = frechet_map(disk, {0.0, 2.0});
    expect(m.kind == LinearMapSpec::Kind::ScaledOrthoProjector &&
               std::abs(m.scale - 0.5) <= 1e-15 &&
               distance(m.axis, {0.0, 2.0}) <= 1e-15,
           "exterior derivative map is the scaled ortho projector");
    bool threw = false;
    try {
      frechet_map(disk, {1.0, 0.0});
    } catch (const Error& e) {
      threw = e.code() == Errc::NotDifferentiable;
    }
    expect(threw, "boundary derivative map is refused");
  }

  // Exterior directional derivative pinned by the forward-difference oracle.
  {
    const Vector want{16.0 / 125.0, -12.0 / 125.0};
    expect(distance(graphical(disk, {3.0, 4.0}, {1.0, 0.0}), want) <= 1e-12,
           "2d exterior graphical derivative value");
    const FdReport fd = fd_directional(disk, {3.0, 4.0}, {1.0, 0.0});
    expect(distance(fd.estimate, want) <= 1e-5,
           "forward differences converge to the exterior derivative");
  }

  r.elapsed_s = seconds_since(t0);
  return r;
}

SuiteResult check_oracle_concordance(const Options& opt) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "oracle_concordance";
  Rng rng(opt.seed);
  SamplingScheme scheme;
  scheme.seed = opt.seed;

  long off_total = 0;
  long off_certified = 0;
  for (int region = 0; region < 3; ++region) {
    for (int i = 0; i < opt.oracle_count; ++i) {
      const std::size_t dim = 1 + static_cast<std::size_t>(i % 5);
      const Ball b = random_ball(rng, dim);
      Vector xbar;
      if (region == 0) xbar = interior_point(rng, b);
      if (region == 1) xbar = exterior_point(rng, b);
      if (region == 2) xbar = boundary_point(rng, b);
      Vector y = nonzero_box(rng, dim, -2.0, 2.0);
      if (region == 2 && inner(y, sub(xbar, b.center)) > 0.0) {
        y = scaled(y, -1.0);  // keep the boundary set nonempty
      }
      const CoderivativeSet set = regular_coderivative(b, xbar, y);

      std::vector<Vector> members;
      if (set.is_singleton()) {
        members.push_back(set.value);
      } else if (set.is_segment()) {
        members.push_back(set.point_at(set.hi));
        members.push_back(set.point_at(set.lo));
        members.push_back(set.point_at(0.5 * (set.lo + set.hi)));
      }
      for (const Vector& z : members) {
        ++r.checks;
        const LimsupReport rep = limsup_quotient(b, xbar, y, z, scheme);
        if (rep.verdict != OracleVerdict::ConsistentMember) {
          fail(r, "closed-form element rejected by the oracle, " +
                      describe(b, xbar, y) +
                      " quotient=" + fmt(rep.witness->quotient));
          diagnose(r, limsup_to_json(rep).dump());
        }
      }

      // Points displaced by 0.1 off the set must be caught.
      std::vector<Vector> off;
      if (set.is_singleton()) {
        off.push_back(axpy(0.1, rng.unit_vector(dim), set.value));
      } else if (set.is_segment()) {
        const double step = 0.1 / norm(set.axis);
        off.push_back(set.point_at(set.lo - step));
        bool added_ortho = false;
        if (dim >= 2) {
          const Vector o = ortho_split(set.axis, rng.normal_vector(dim)).ortho;
          if (norm(o) > 1e-9) {
            off.push_back(axpy(0.1 / norm(o), o,
                               set.point_at(0.5 * (set.lo + set.hi))));
            added_ortho = true;
          }
        }
        if (!added_ortho) off.push_back(set.point_at(set.hi + step));
      }
      for (const Vector& z : off) {
        ++off_total;
        const LimsupReport rep = limsup_quotient(b, xbar, y, z, scheme);
        if (rep.verdict == OracleVerdict::CertifiedNonMember) {
          ++off_certified;
        } else {
          diagnose(r, "missed off-set point, " + describe(b, xbar, y) + ": " +
                          limsup_to_json(rep).dump());
        }
      }
    }
  }

  ++r.checks;
  if (off_total > 0 &&
      static_cast<double>(off_certified) < 0.95 * static_cast<double>(off_total)) {
    fail(r, "off-set certification rate " + std::to_string(off_certified) + "/" +
                std::to_string(off_total) + " below 95%");
  }
  r.elapsed_s = seconds_since(t0);
  return r;
}

SuiteResult check_fd_consistency(const Options& opt) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "fd_consistency";
  Rng rng(opt.seed + 1);
  const std::vector<double> ts = default_t_schedule();
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int i = 0; i < opt.fd_count; ++i) {
    const int branch = i % 5;  // interior, exterior, up, down, tangent
    const std::size_t dim = 1 + static_cast<std::size_t>(rng.uniform_int(0, 4));
    const Ball b = random_ball(rng, dim);
    Vector x;
    if (branch == 0) x = interior_point(rng, b);
    else if (branch == 1) x = exterior_point(rng, b);
    else x = boundary_point(rng, b);

    Vector u = nonzero_box(rng, dim, -2.0, 2.0);
    const Vector s = sub(x, b.center);
    if (branch == 2 && inner(s, u) < 0.0) u = scaled(u, -1.0);
    if (branch == 3 && inner(s, u) > 0.0) u = scaled(u, -1.0);
    if (branch == 4) {
      if (dim >= 2) {
        Vector o = ortho_split(s, u).ortho;
        if (norm(o) < 1e-6) o = ortho_split(s, rng.unit_vector(dim)).ortho;
        if (norm(o) >= 1e-6) u = o;
      }
      if (is_zero(u)) u = s;  // dim 1 fallback: radial (Up) direction
    }

    const Vector g = gateaux(b, x, u);
    const Vector p_x = project(b, x);
    const double u2 = inner(u, u);
    const double floor_scale =
        100.0 * eps * std::max({1.0, norm(x), std::sqrt(u2)});

    ++r.checks;
    double prev_err = std::numeric_limits<double>::infinity();
    bool ok = true;
    std::string why;
    for (double t : ts) {
      const Vector q = scaled(sub(project(b, axpy(t, u, x)), p_x), 1.0 / t);
      const double err = distance(q, g);
      if (err > 10.0 * t * (1.0 + u2)) {
        ok = false;
        why = "bound exceeded at t=" + fmt(t) + ": err=" + fmt(err);
        break;
      }
      // Halve per decade until the quotient reaches its roundoff floor.
      const double allowed = std::max(prev_err / 2.0, floor_scale / t);
      if (err > allowed) {
        ok = false;
        why = "rate violated at t=" + fmt(t) + ": err=" + fmt(err) +
              " allowed=" + fmt(allowed);
        break;
      }
      prev_err = err;
    }
    if (!ok) {
      fail(r, "fd mismatch (branch " + std::to_string(branch) + ", " +
                  describe(b, x, u) + "): " + why);
    }
  }
  r.elapsed_s = seconds_since(t0);
  return r;
}

SuiteResult check_projection_properties(const Options& opt) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "projection_properties";
  Rng rng(opt.seed + 2);
  for (int i = 0; i < opt.property_pairs; ++i) {
    const std::size_t dim = 1 + static_cast<std::size_t>(i % 5);
    const Ball b = random_ball(rng, dim);
    const Vector x1 = rng.box_vector(dim, -4.0, 4.0);
    const Vector x2 = rng.box_vector(dim, -4.0, 4.0);
    const Vector p1 = project(b, x1);
    const Vector p2 = project(b, x2);
    ++r.checks;
    if (distance(p1, p2) > distance(x1, x2) + 1e-12) {
      fail(r, "nonexpansiveness violated, dim=" + std::to_string(dim));
    }
    ++r.checks;
    if (distance(project(b, p1), p1) > 1e-12) {
      fail(r, "idempotence violated, dim=" + std::to_string(dim));
    }
  }
  r.elapsed_s = seconds_since(t0);
  return r;
}

SuiteResult check_translation_covariance(const Options& opt) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "translation_covariance";
  Rng rng(opt.seed + 3);
  for (int i = 0; i < opt.covariance_count; ++i) {
    const std::size_t dim = 1 + static_cast<std::size_t>(i % 5);
    const Ball b = random_ball(rng, dim);
    const Ball centered{zeros(dim), b.radius};
    Vector x;
    switch (i % 4) {
      case 0: x = interior_point(rng, b); break;
      case 1: x = exterior_point(rng, b); break;
      default: x = boundary_point(rng, b); break;
    }
    const Vector y = nonzero_box(rng, dim, -2.0, 2.0);
    const Vector shifted = sub(x, b.center);

    ++r.checks;
    if (distance(project(b, x), add(b.center, project(centered, shifted))) >
        1e-12) {
      fail(r, "projection translation identity violated, " + describe(b, x, y));
    }
    ++r.checks;
    if (!set_equal(regular_coderivative(b, x, y),
                   regular_coderivative(centered, shifted, y), 1e-12)) {
      fail(r, "coderivative translation covariance violated, " +
                  describe(b, x, y));
    }
  }
  r.elapsed_s = seconds_since(t0);
  return r;
}

SuiteResult check_boundary_special_cases(const Options& opt) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "boundary_special_cases";
  Rng rng(opt.seed + 4);
  for (int i = 0; i < opt.boundary_count; ++i) {
    const std::size_t dim = 1 + static_cast<std::size_t>(i % 5);
    const Ball b = random_ball(rng, dim);
    const Vector xbar = boundary_point(rng, b);
    const Vector s = sub(xbar, b.center);

    ++r.checks;
    if (!coderivative_special(b, xbar).all()) {
      fail(r, "degenerate boundary inputs misbehaved, " + describe(b, xbar, s));
    }

    // 0-membership: a strictly inward radial y passes, an outward radial or
    // off-line y fails; the closed form and set_membership must agree.
    const Vector y_in = scaled(s, -rng.uniform(0.1, 2.0));
    ++r.checks;
    if (!zero_in_coderivative(b, xbar, y_in) ||
        !set_membership(regular_coderivative(b, xbar, y_in), zeros(dim))) {
      fail(r, "0 should be a member for inward radial y, " +
                  describe(b, xbar, y_in));
    }
    const Vector y_out = scaled(s, rng.uniform(0.1, 2.0));
    ++r.checks;
    if (zero_in_coderivative(b, xbar, y_out) ||
        set_membership(regular_coderivative(b, xbar, y_out), zeros(dim))) {
      fail(r, "0 should not be a member for outward radial y, " +
                  describe(b, xbar, y_out));
    }
    if (dim >= 2) {
      Vector w = ortho_split(s, rng.unit_vector(dim)).ortho;
      if (norm(w) > 1e-9) {
        w = scaled(w, rng.uniform(0.1, 1.0) / norm(w));
        const Vector y_off = add(y_in, w);
        ++r.checks;
        if (zero_in_coderivative(b, xbar, y_off) ||
            set_membership(regular_coderivative(b, xbar, y_off), zeros(dim))) {
          fail(r, "0 should not be a member off the radial line, " +
                      describe(b, xbar, y_off));
        }
      }
    }
  }
  r.elapsed_s = seconds_since(t0);
  return r;
}

SuiteResult check_segment_constraints(const Options& opt) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "segment_constraints";
  Rng rng(opt.seed + 5);
  for (int i = 0; i < opt.segment_count; ++i) {
    const std::size_t dim = 1 + static_cast<std::size_t>(i % 5);
    const Ball b = random_ball(rng, dim);
    const Vector xbar = boundary_point(rng, b);
    const Vector s = sub(xbar, b.center);
    Vector y = nonzero_box(rng, dim, -2.0, 2.0);
    if (inner(y, s) > 0.0) y = scaled(y, -1.0);
    const double ip = inner(y, s);

    const CoderivativeSet set = regular_coderivative(b, xbar, y);
    ++r.checks;
    bool ok = true;
    std::string why;
    std::vector<Vector> samples;
    if (set.is_segment()) {
      for (int j = 0; j <= 10; ++j) {
        samples.push_back(
            set.point_at(set.lo + (set.hi - set.lo) * (j / 10.0)));
      }
    } else if (set.is_singleton()) {
      samples.push_back(set.value);
    } else {
      ok = false;
      why = "unexpected empty set with <y,s> <= 0";
    }
    for (const Vector& z : samples) {
      const double zs = inner(z, s);
      if (!(ip - 1e-10 <= zs && zs <= 1e-10)) {
        ok = false;
        why = "inner-product chain violated: <z,s>=" + fmt(zs);
        break;
      }
      const double off_line = norm(ortho_split(s, sub(y, z)).ortho);
      if (off_line > 1e-10) {
        ok = false;
        why = "parallelism violated: off-line norm=" + fmt(off_line);
        break;
      }
    }
    if (!ok) fail(r, "segment constraint audit failed, " + describe(b, xbar, y) + ": " + why);
  }
  r.elapsed_s = seconds_since(t0);
  return r;
}

std::vector<SuiteResult> run_suite(const std::string& which, const Options& opt) {
  if (which != "all" && which != "examples" && which != "oracle" &&
      which != "properties") {
    throw Error(Errc::InvalidArgument,
                "unknown suite '" + which +
                    "' (expected examples|oracle|properties|all)");
  }
  std::vector<SuiteResult> out;
  const bool all = which == "all";
  if (all || which == "examples") {
    out.push_back(check_coderivative_table_1d());
    out.push_back(check_graphical_table_1d());
    out.push_back(check_fixed_cases());
  }
  if (all || which == "oracle") {
    out.push_back(check_oracle_concordance(opt));
  }
  if (all || which == "properties") {
    out.push_back(check_fd_consistency(opt));
    out.push_back(check_projection_properties(opt));
    out.push_back(check_translation_covariance(opt));
    out.push_back(check_boundary_special_cases(opt));
    out.push_back(check_segment_constraints(opt));
  }
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed(); });
}

}  // namespace ballproj::verify
