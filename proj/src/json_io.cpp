#include "ballproj/json_io.hpp"

#include <cmath>
#include <string>

namespace ballproj {

Json vector_to_json(const Vector& v) { return Json(v); }

Vector vector_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw Error(Errc::InvalidArgument,
                std::string(what) + " must be a nonempty array of numbers");
  }
  Vector v;
  v.reserve(j.size());
  for (const Json& c : j) {
    if (!c.is_number()) {
      throw Error(Errc::InvalidArgument,
                  std::string(what) + " must contain only numbers");
    }
    const double x = c.get<double>();
    if (!std::isfinite(x)) {
      throw Error(Errc::InvalidArgument,
                  std::string(what) + " must contain only finite numbers");
    }
    v.push_back(x);
  }
  return v;
}

Json ball_to_json(const Ball& b) {
  return Json{{"center", vector_to_json(b.center)}, {"radius", b.radius}};
}

Ball ball_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("radius")) {
    throw Error(Errc::InvalidArgument,
                "ball must be an object with 'center' and 'radius'");
  }
  Ball b;
  b.center = vector_from_json(j["center"], "ball center");
  if (!j["radius"].is_number()) {
    throw Error(Errc::InvalidArgument, "ball radius must be a number");
  }
  b.radius = j["radius"].get<double>();
  validate_ball(b);
  return b;
}

Json region_to_json(const Region& r) {
  return Json{{"tag", to_string(r.tag)}, {"signed_gap", r.signed_gap}};
}

Json map_to_json(const LinearMapSpec& m) {
  if (m.kind == LinearMapSpec::Kind::Identity) {
    return Json{{"kind", "identity"}};
  }
  return Json{{"kind", "scaled_ortho_projector"},
              {"scale", m.scale},
              {"axis", vector_to_json(m.axis)}};
}

Json set_to_json(const CoderivativeSet& s) {
  switch (s.tag) {
    case CoderivativeSet::Tag::Empty:
      return Json{{"tag", "empty"}};
    case CoderivativeSet::Tag::Singleton:
      return Json{{"tag", "singleton"}, {"value", vector_to_json(s.value)}};
    case CoderivativeSet::Tag::Segment: {
      const auto [p, q] = s.endpoints();
      return Json{{"tag", "segment"},
                  {"endpoints", Json::array({vector_to_json(p), vector_to_json(q)})}};
    }
  }
  throw Error(Errc::InvalidArgument, "unreachable set tag");
}

CoderivativeSet set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("tag") || !j["tag"].is_string()) {
    throw Error(Errc::InvalidArgument, "set must be an object with a 'tag'");
  }
  const std::string tag = j["tag"].get<std::string>();
  if (tag == "empty") return CoderivativeSet::make_empty();
  if (tag == "singleton") {
    if (!j.contains("value")) {
      throw Error(Errc::InvalidArgument, "singleton set needs a 'value'");
    }
    return CoderivativeSet::make_singleton(
        vector_from_json(j["value"], "singleton value"));
  }
  if (tag == "segment") {
    if (!j.contains("endpoints") || !j["endpoints"].is_array() ||
        j["endpoints"].size() != 2) {
      throw Error(Errc::InvalidArgument,
                  "segment set needs 'endpoints' with two vectors");
    }
    const Vector p = vector_from_json(j["endpoints"][0], "segment endpoint");
    const Vector q = vector_from_json(j["endpoints"][1], "segment endpoint");
    dim_match(p, q);
    return segment_from_endpoints(p, q);
  }
  throw Error(Errc::InvalidArgument, "unknown set tag '" + tag + "'");
}

Json limsup_to_json(const LimsupReport& r) {
  Json per_radius = Json::array();
  for (const RadiusStat& s : r.per_radius) {
    per_radius.push_back(Json{{"radius", s.radius},
                              {"max_quotient", s.max_quotient},
                              {"argmax_direction", vector_to_json(s.argmax_direction)}});
  }
  Json out{{"verdict", to_string(r.verdict)},
           {"per_radius", std::move(per_radius)},
           {"strong_member_evidence", r.strong_member_evidence}};
  if (r.witness) {
    out["witness"] = Json{{"direction", vector_to_json(r.witness->direction)},
                          {"radius", r.witness->radius},
                          {"quotient", r.witness->quotient}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json fd_to_json(const FdReport& r) {
  Json deviations = Json::array();
  for (const auto& [t, err] : r.deviations) {
    deviations.push_back(Json{{"t", t}, {"deviation", err}});
  }
  return Json{{"estimate", vector_to_json(r.estimate)},
              {"deviations", std::move(deviations)}};
}

}  // namespace ballproj
