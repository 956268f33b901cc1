#pragma once

#include <json.hpp>

#include "ballproj/coderivative.hpp"
#include "ballproj/oracle.hpp"

namespace ballproj {

using Json = nlohmann::json;

// Wire formats:
//   Vector           [x1, x2, ...]
//   Ball             {"center": [...], "radius": r}
//   Region           {"tag": "interior|boundary|exterior", "signed_gap": g}
//   LinearMapSpec    {"kind": "identity"}
//                    {"kind": "scaled_ortho_projector", "scale": s, "axis": [...]}
//   CoderivativeSet  {"tag": "empty"}
//                    {"tag": "singleton", "value": [...]}
//                    {"tag": "segment", "endpoints": [[...], [...]]}
// Parsing validates shape, finiteness, and positivity constraints and throws
// Error(Errc::InvalidArgument) with a field-specific message.

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const char* what);

Json ball_to_json(const Ball& b);
Ball ball_from_json(const Json& j);

Json region_to_json(const Region& r);
Json map_to_json(const LinearMapSpec& m);

Json set_to_json(const CoderivativeSet& s);
CoderivativeSet set_from_json(const Json& j);

Json limsup_to_json(const LimsupReport& r);
Json fd_to_json(const FdReport& r);

}  // namespace ballproj
