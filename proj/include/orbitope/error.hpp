#pragma once

#include <stdexcept>
#include <string>

namespace orbitope {

enum class ErrorKind { Parse, Precondition, Resource, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

struct ResourceError : Error {
  explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

// Named precondition failures.
struct SingularGram : PreconditionError {
  SingularGram() : PreconditionError("Gram matrix is singular: the family does not span the space") {}
};

struct NotGenerating : PreconditionError {
  NotGenerating() : PreconditionError("point is not a generating point") {}
};

struct NoGeneratingPoint : PreconditionError {
  NoGeneratingPoint() : PreconditionError("group has no generating point: det Q(X) vanishes identically") {}
};

struct NotASymmetry : PreconditionError {
  NotASymmetry() : PreconditionError("permutation is not a linear symmetry of the family") {}
};

struct NotIdempotent : PreconditionError {
  NotIdempotent() : PreconditionError("element is not idempotent") {}
};

struct NotOrthogonal : PreconditionError {
  NotOrthogonal() : PreconditionError("<1-f, f> != 0") {}
};

struct OrderExceeded : ResourceError {
  explicit OrderExceeded(std::size_t bound)
      : ResourceError("group closure exceeded max order " + std::to_string(bound)) {}
};

struct DimensionTooLarge : ResourceError {
  explicit DimensionTooLarge(const std::string& what) : ResourceError(what) {}
};

}  // namespace orbitope
