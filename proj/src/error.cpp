#include "gtensor/error.hpp"

#include <cstdlib>
#include <limits>

namespace gtensor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::LoopForbidden: return "LoopForbidden";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownIndex: return "UnknownIndex";
    case ErrorKind::EqualVertices: return "EqualVertices";
    case ErrorKind::MissingStructure: return "MissingStructure";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

SearchBudget SearchBudget::standard() {
  constexpr std::uint64_t kDefault = 10'000'000;
  if (const char* env = std::getenv("GRAPHTENSOR_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) return SearchBudget{value};
  }
  return SearchBudget{kDefault};
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result = saturating_mul(result, base);
  return result;
}

void require_within(const SearchBudget& budget, std::uint64_t count, std::string_view what) {
  if (count > budget.cap) {
    throw Error(ErrorKind::SearchBudgetExceeded,
                std::string(what) + " needs " + std::to_string(count) + " candidates, cap is " +
                    std::to_string(budget.cap));
  }
}

}  // namespace gtensor
