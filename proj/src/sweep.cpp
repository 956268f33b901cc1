#include "ballproj/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <tuple>

namespace ballproj {

const char* to_string(SweepQuantity q) noexcept {
  switch (q) {
    case SweepQuantity::Region: return "region";
    case SweepQuantity::CoderivativeEmptiness: return "coderivative-emptiness";
    case SweepQuantity::SegmentEndpoints: return "segment-endpoints";
    case SweepQuantity::GateauxField: return "gateaux-field";
  }
  return "unknown";
}

SweepQuantity sweep_quantity_from_name(const std::string& name) {
  if (name == "region") return SweepQuantity::Region;
  if (name == "coderivative-emptiness") return SweepQuantity::CoderivativeEmptiness;
  if (name == "segment-endpoints") return SweepQuantity::SegmentEndpoints;
  if (name == "gateaux-field") return SweepQuantity::GateauxField;
  throw Error(Errc::InvalidArgument, "unknown sweep quantity '" + name + "'");
}

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

long axis_points(double lo, double hi, double step) {
  if (hi < lo) {
    throw Error(Errc::InvalidArgument, "grid range must have max >= min");
  }
  return static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

std::string sweep2d_csv(const SweepRequest& req) {
  validate_ball(req.ball);
  if (req.ball.center.size() != 2) {
    throw Error(Errc::InvalidArgument, "sweep2d requires a 2D ball");
  }
  if (!(req.grid.step > 0.0) || !std::isfinite(req.grid.step)) {
    throw Error(Errc::InvalidArgument, "grid step must be positive");
  }
  const bool needs_y = req.quantity == SweepQuantity::CoderivativeEmptiness ||
                       req.quantity == SweepQuantity::SegmentEndpoints;
  if (needs_y && req.y.size() != 2) {
    throw Error(Errc::InvalidArgument, "this sweep quantity needs a 2D 'y'");
  }
  if (req.quantity == SweepQuantity::GateauxField && req.u.size() != 2) {
    throw Error(Errc::InvalidArgument, "gateaux-field sweep needs a 2D 'u'");
  }

  const long n1 = axis_points(req.grid.x1_min, req.grid.x1_max, req.grid.step);
  const long n2 = axis_points(req.grid.x2_min, req.grid.x2_max, req.grid.step);

  std::string out;
  switch (req.quantity) {
    case SweepQuantity::Region: out = "x1,x2,region,gap\n"; break;
    case SweepQuantity::CoderivativeEmptiness: out = "x1,x2,region,empty\n"; break;
    case SweepQuantity::SegmentEndpoints:
      out = "x1,x2,region,end1_1,end1_2,end2_1,end2_2\n";
      break;
    case SweepQuantity::GateauxField: out = "x1,x2,region,g1,g2\n"; break;
  }

  const double nan = std::nan("");
  for (long i = 0; i < n1; ++i) {
    const double x1 = req.grid.x1_min + static_cast<double>(i) * req.grid.step;
    for (long j = 0; j < n2; ++j) {
      const double x2 = req.grid.x2_min + static_cast<double>(j) * req.grid.step;
      const Vector x{x1, x2};
      const Region reg = classify(req.ball, x, req.tol);
      out += fmt17(x1);
      out += ',';
      out += fmt17(x2);
      out += ',';
      out += to_string(reg.tag);
      switch (req.quantity) {
        case SweepQuantity::Region:
          out += ',';
          out += fmt17(reg.signed_gap);
          break;
        case SweepQuantity::CoderivativeEmptiness: {
          const CoderivativeSet s = regular_coderivative(req.ball, x, req.y, req.tol);
          out += s.is_empty() ? ",1" : ",0";
          break;
        }
        case SweepQuantity::SegmentEndpoints: {
          const CoderivativeSet s = regular_coderivative(req.ball, x, req.y, req.tol);
          Vector p{nan, nan}, q{nan, nan};
          if (s.is_singleton()) {
            p = s.value;
            q = s.value;
          } else if (s.is_segment()) {
            std::tie(p, q) = s.endpoints();
          }
          for (double c : {p[0], p[1], q[0], q[1]}) {
            out += ',';
            out += fmt17(c);
          }
          break;
        }
        case SweepQuantity::GateauxField: {
          const Vector g = gateaux(req.ball, x, req.u, req.tol);
          out += ',';
          out += fmt17(g[0]);
          out += ',';
          out += fmt17(g[1]);
          break;
        }
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace ballproj
