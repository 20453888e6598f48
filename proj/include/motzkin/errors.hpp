#pragma once

#include <stdexcept>
#include <string>

namespace motzkin {

struct MotzkinError : std::runtime_error {
  explicit MotzkinError(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : MotzkinError {
  explicit ShapeMismatch(const std::string& what) : MotzkinError(what) {}
};

struct SeamMismatch : MotzkinError {
  explicit SeamMismatch(const std::string& what) : MotzkinError(what) {}
};

struct BoundExceeded : MotzkinError {
  explicit BoundExceeded(const std::string& what) : MotzkinError(what) {}
};

struct IndexOutOfRange : MotzkinError {
  explicit IndexOutOfRange(const std::string& what) : MotzkinError(what) {}
};

struct ParseError : MotzkinError {
  explicit ParseError(const std::string& what) : MotzkinError(what) {}
};

struct NotIdempotent : MotzkinError {
  explicit NotIdempotent(const std::string& what) : MotzkinError(what) {}
};

struct DomainError : MotzkinError {
  explicit DomainError(const std::string& what) : MotzkinError(what) {}
};

// Raised when a g_{k+1} (or anything downstream of it) would require
// dividing by P_k(tau) = 0.  `stage` is the k whose Chebyshev value vanished.
struct GenericityViolation : MotzkinError {
  int stage;
  GenericityViolation(int stage_, const std::string& what)
      : MotzkinError(what), stage(stage_) {}
};

}  // namespace motzkin
