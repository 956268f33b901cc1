#include "ballproj/request.hpp"

#include <cmath>

#include "ballproj/json_io.hpp"
#include "ballproj/sweep.hpp"
#include "ballproj/verify.hpp"

namespace ballproj {

namespace {

using Json = nlohmann::json;

const Json& field(const Json& j, const char* name) {
  if (!j.contains(name)) {
    throw Error(Errc::InvalidArgument,
                std::string("missing request field '") + name + "'");
  }
  return j[name];
}

double positive_number(const Json& j, const char* name) {
  if (!j.is_number()) {
    throw Error(Errc::InvalidArgument, std::string(name) + " must be a number");
  }
  const double x = j.get<double>();
  if (!std::isfinite(x) || x <= 0.0) {
    throw Error(Errc::InvalidArgument,
                std::string(name) + " must be positive and finite");
  }
  return x;
}

double request_tol(const Json& req, const RunOverrides& ov) {
  if (ov.tol) {
    if (!(*ov.tol > 0.0) || !std::isfinite(*ov.tol)) {
      throw Error(Errc::InvalidArgument, "tolerance must be positive and finite");
    }
    return *ov.tol;
  }
  if (req.contains("tol")) return positive_number(req["tol"], "tol");
  return kClassifyTolDefault;
}

RunOutput ok_output(Json result, int exit_code = 0) {
  Json response{{"ok", true}, {"result", std::move(result)}};
  return RunOutput{exit_code, response.dump(), false};
}

RunOutput error_output(const char* code, const std::string& message) {
  Json response{{"ok", false},
                {"error", Json{{"code", code}, {"message", message}}}};
  return RunOutput{2, response.dump(), false};
}

GridSpec grid_from_json(const Json& j) {
  if (!j.is_object()) {
    throw Error(Errc::InvalidArgument, "grid must be an object");
  }
  auto range = [&](const char* name, double& lo, double& hi) {
    const Json& v = field(j, name);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw Error(Errc::InvalidArgument,
                  std::string("grid '") + name + "' must be [min, max]");
    }
    lo = v[0].get<double>();
    hi = v[1].get<double>();
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
      throw Error(Errc::InvalidArgument,
                  std::string("grid '") + name + "' must be a finite range");
    }
  };
  GridSpec g;
  range("x", g.x1_min, g.x1_max);
  range("y", g.x2_min, g.x2_max);
  g.step = positive_number(field(j, "step"), "grid step");
  return g;
}

Json suite_results_to_json(const std::vector<verify::SuiteResult>& results) {
  Json suites = Json::array();
  long checks = 0;
  long failures = 0;
  // No timings here: responses must be byte-identical for a fixed seed.
  for (const verify::SuiteResult& r : results) {
    checks += r.checks;
    failures += r.failures;
    suites.push_back(Json{{"name", r.name},
                          {"checks", r.checks},
                          {"failures", r.failures},
                          {"first_failures", r.failure_notes},
                          {"diagnostics", r.diagnostics}});
  }
  return Json{{"suites", std::move(suites)},
              {"total_checks", checks},
              {"total_failures", failures},
              {"passed", failures == 0}};
}

RunOutput dispatch(const Json& req, const RunOverrides& ov) {
  if (!req.is_object()) {
    throw Error(Errc::InvalidArgument, "request must be a JSON object");
  }
  const Json& cmd_field = field(req, "command");
  if (!cmd_field.is_string()) {
    throw Error(Errc::InvalidArgument, "command must be a string");
  }
  const std::string cmd = cmd_field.get<std::string>();
  const double tol = request_tol(req, ov);

  if (cmd == "project") {
    const Ball b = ball_from_json(field(req, "ball"));
    const Vector x = vector_from_json(field(req, "x"), "x");
    return ok_output(vector_to_json(project(b, x)));
  }
  if (cmd == "classify") {
    const Ball b = ball_from_json(field(req, "ball"));
    const Vector x = vector_from_json(field(req, "x"), "x");
    return ok_output(region_to_json(classify(b, x, tol)));
  }
  if (cmd == "gateaux") {
    const Ball b = ball_from_json(field(req, "ball"));
    const Vector x = vector_from_json(field(req, "x"), "x");
    const Vector u = vector_from_json(field(req, "u"), "u");
    return ok_output(vector_to_json(gateaux(b, x, u, tol)));
  }
  if (cmd == "graphical") {
    const Ball b = ball_from_json(field(req, "ball"));
    const Vector x = vector_from_json(field(req, "x"), "x");
    const Vector y = vector_from_json(field(req, "y"), "y");
    // The graphical derivative is a set map; here it is always the singleton
    // holding the directional derivative.
    return ok_output(set_to_json(
        CoderivativeSet::make_singleton(graphical(b, x, y, tol))));
  }
  if (cmd == "frechet") {
    const Ball b = ball_from_json(field(req, "ball"));
    const Vector x = vector_from_json(field(req, "x"), "x");
    return ok_output(map_to_json(frechet_map(b, x, tol)));
  }
  if (cmd == "coderivative") {
    const Ball b = ball_from_json(field(req, "ball"));
    const Vector x = vector_from_json(field(req, "x"), "x");
    const Vector y = vector_from_json(field(req, "y"), "y");
    return ok_output(set_to_json(regular_coderivative(b, x, y, tol)));
  }
  if (cmd == "membership") {
    const Ball b = ball_from_json(field(req, "ball"));
    const Vector x = vector_from_json(field(req, "x"), "x");
    const Vector y = vector_from_json(field(req, "y"), "y");
    const Vector z = vector_from_json(field(req, "z"), "z");
    const CoderivativeSet set = regular_coderivative(b, x, y, tol);
    dim_match(x, z);
    const bool member = req.contains("eps")
                            ? set_membership(set, z, positive_number(req["eps"], "eps"))
                            : set_membership(set, z);
    const double dist = set_distance(set, z);
    Json result{{"member", member}, {"set", set_to_json(set)}};
    result["distance"] = std::isfinite(dist) ? Json(dist) : Json(nullptr);
    return ok_output(std::move(result));
  }
  if (cmd == "verify") {
    std::string suite = "all";
    if (req.contains("suite")) {
      if (!req["suite"].is_string()) {
        throw Error(Errc::InvalidArgument, "suite must be a string");
      }
      suite = req["suite"].get<std::string>();
    }
    verify::Options opt;
    if (ov.seed) {
      opt.seed = *ov.seed;
    } else if (req.contains("seed")) {
      if (!req["seed"].is_number_integer()) {
        throw Error(Errc::InvalidArgument, "seed must be an integer");
      }
      opt.seed = req["seed"].get<std::uint64_t>();
    }
    if (req.contains("count")) {
      if (!req["count"].is_number_integer() || req["count"].get<long>() <= 0) {
        throw Error(Errc::InvalidArgument, "count must be a positive integer");
      }
      const int count = req["count"].get<int>();
      opt.oracle_count = count;
      opt.fd_count = count;
    }
    const std::vector<verify::SuiteResult> results = verify::run_suite(suite, opt);
    Json summary = suite_results_to_json(results);
    summary["suite"] = suite;
    summary["seed"] = opt.seed;
    const bool passed = verify::all_passed(results);
    return ok_output(std::move(summary), passed ? 0 : 3);
  }
  if (cmd == "sweep2d") {
    SweepRequest sweep;
    sweep.ball = ball_from_json(field(req, "ball"));
    sweep.grid = grid_from_json(field(req, "grid"));
    const Json& quantity = field(req, "quantity");
    if (!quantity.is_string()) {
      throw Error(Errc::InvalidArgument, "quantity must be a string");
    }
    sweep.quantity = sweep_quantity_from_name(quantity.get<std::string>());
    if (sweep.quantity == SweepQuantity::CoderivativeEmptiness ||
        sweep.quantity == SweepQuantity::SegmentEndpoints) {
      sweep.y = vector_from_json(field(req, "y"), "y");
    }
    if (sweep.quantity == SweepQuantity::GateauxField) {
      sweep.u = vector_from_json(field(req, "u"), "u");
    }
    sweep.tol = tol;
    return RunOutput{0, sweep2d_csv(sweep), true};
  }
  throw Error(Errc::InvalidArgument, "unknown command '" + cmd + "'");
}

}  // namespace

RunOutput run_request(const nlohmann::json& request, const RunOverrides& ov) {
  try {
    return dispatch(request, ov);
  } catch (const Error& e) {
    return error_output(e.code_name(), e.what());
  } catch (const Json::exception& e) {
    return error_output("invalid_argument", e.what());
  }
}

RunOutput run_request_text(const std::string& text, const RunOverrides& ov) {
  Json req = Json::parse(text, nullptr, false);
  if (req.is_discarded()) {
    return error_output("invalid_argument", "malformed JSON request");
  }
  return run_request(req, ov);
}

}  // namespace ballproj
