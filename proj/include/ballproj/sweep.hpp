#pragma once

#include <string>

#include "ballproj/coderivative.hpp"

namespace ballproj {

// Rectangular grid for 2D sweeps. Rows are emitted row-major: the first
// coordinate varies in the outer loop, the second in the inner loop, both
// ascending. Grid points are min + k*step, computed from the index.
struct GridSpec {
  double x1_min = -2.0;
  double x1_max = 2.0;
  double x2_min = -2.0;
  double x2_max = 2.0;
  double step = 0.5;
};

enum class SweepQuantity {
  Region,                 // x1,x2,region,gap
  CoderivativeEmptiness,  // x1,x2,region,empty           (fixed y)
  SegmentEndpoints,       // x1,x2,region,end1_1,...      (fixed y)
  GateauxField,           // x1,x2,region,g1,g2           (fixed u)
};

const char* to_string(SweepQuantity q) noexcept;
SweepQuantity sweep_quantity_from_name(const std::string& name);

struct SweepRequest {
  Ball ball;  // must be 2D
  GridSpec grid;
  SweepQuantity quantity = SweepQuantity::Region;
  Vector y;  // CoderivativeEmptiness / SegmentEndpoints input direction
  Vector u;  // GateauxField direction
  double tol = kClassifyTolDefault;
};

// CSV with a mandatory header row, comma separators, LF line endings, and
// numbers printed with 17 significant digits. Cells without a defined value
// (endpoints of an empty set) hold "nan".
std::string sweep2d_csv(const SweepRequest& req);

}  // namespace ballproj
