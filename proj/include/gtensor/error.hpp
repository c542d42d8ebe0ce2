#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gtensor {

enum class ErrorKind {
  EmptyVertexSet,
  DanglingEndpoint,
  LoopForbidden,
  DuplicateVertex,
  SearchBudgetExceeded,
  EmptySelection,
  UnknownVertex,
  UnknownIndex,
  EqualVertices,
  MissingStructure,
  InvalidFamily,
  ParseError,
  UnknownSymbol,
  NotACongruence,
  NotAHomomorphism,
  DomainMismatch,
  NoFactorization,
  PreconditionViolated,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry the byte offset into the input where they were detected.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what, ErrorKind kind = ErrorKind::ParseError)
      : Error(kind, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Upper bound on the number of candidates an exhaustive search may visit.
/// The default is 10^7, overridable through the GRAPHTENSOR_BUDGET environment
/// variable.
struct SearchBudget {
  std::uint64_t cap;

  static SearchBudget standard();
};

// Throws SearchBudgetExceeded when `count` (or an overflowing product) exceeds the cap.
void require_within(const SearchBudget& budget, std::uint64_t count, std::string_view what);

// Multiplies with saturation at UINT64_MAX.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent);

}  // namespace gtensor
