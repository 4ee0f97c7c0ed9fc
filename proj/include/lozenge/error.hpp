// Shared error type.  Each failure mode carries a stable code so callers
// (and tests) can dispatch without string matching.

#pragma once

#include <stdexcept>
#include <string>

namespace lozenge {

enum class Errc {
  BadLetter,
  Empty,
  NotClosed,
  SelfIntersecting,
  EmptyInterior,
  BadSize,
  NotAPlanePartition,
  NotATiling,
  NotAHeightFunction,
  DomainMismatch,
  NotFlippable,
  Untileable,
  NotFlipClosed,
  NotComparable,
  OutOfRange,
  NotFertile,
  UnsatisfiableCube,
  DuplicateDetected,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace lozenge
