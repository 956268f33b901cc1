#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace ballproj {

// Command-line overrides; they win over the matching request fields.
struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

struct RunOutput {
  int exit_code = 0;  // 0 ok, 2 input error, 3 verification failure
  std::string body;   // JSON response, or CSV for sweep2d
  bool csv = false;
};

// Dispatches a request object {"command": ..., ...}. Successful commands
// respond {"ok": true, "result": ...}; input errors respond
// {"ok": false, "error": {"code": ..., "message": ...}} with exit code 2.
// The verify command keeps ok = true and reports failed suites through the
// result with exit code 3.
RunOutput run_request(const nlohmann::json& request, const RunOverrides& ov = {});

// Parses text first; malformed JSON becomes an invalid_argument error response.
RunOutput run_request_text(const std::string& text, const RunOverrides& ov = {});

}  // namespace ballproj
