#pragma once

#include <stdexcept>
#include <string>

namespace vdh {

enum class ErrorCode {
  InvalidArity,
  NotALeaf,
  DepthLimit,
  ArityMismatch,
  UnderspecifiedPoint,
  QConflict,
  SizeLimit,
  GroupMismatch,
  BallLimit,
  NotComparable,
  BoundExceeded,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace vdh
