#pragma once

#include <stdexcept>
#include <string>

namespace ballproj {

// Error categories. The CLI surfaces code_name() as the machine-readable
// "code" field of error responses.
enum class Errc {
  DimensionMismatch,
  ZeroReference,
  ZeroDirection,
  NotBoundary,
  NotDifferentiable,
  InvalidArgument,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace ballproj
