#pragma once

// Product processes and the P-product of a graph family.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gtensor/constraint.hpp"
#include "gtensor/family.hpp"
#include "gtensor/graph.hpp"
#include "gtensor/process.hpp"

namespace gtensor {

/// A rule turning a family into an edge set on the product vertex set: one of
/// the five built-ins, or a constraint spec read existentially.
class ProductProcess {
 public:
  static ProductProcess builtin(BuiltinProduct kind) { return ProductProcess(kind); }
  static ProductProcess constraints(ConstraintSpec spec) { return ProductProcess(std::move(spec)); }

  std::optional<BuiltinProduct> builtin_kind() const;
  const ConstraintSpec* spec() const { return std::get_if<ConstraintSpec>(&rule_); }

  bool needs_order() const;
  bool needs_distinguished() const;
  /// Member of the class whose constraints include L = empty: cartesian,
  /// direct, strong, or a spec containing the atom `L = empty`.
  bool forces_empty_l() const;
  /// Throws MissingStructure if the family lacks an order or D this process needs.
  void require_structure(const GraphFamily& fam) const;

  std::string name() const;

 private:
  explicit ProductProcess(std::variant<BuiltinProduct, ConstraintSpec> rule) : rule_(std::move(rule)) {}

  std::variant<BuiltinProduct, ConstraintSpec> rule_;
};

/// Whether {f, g} is an edge of the product. f == g is a loop candidate only
/// for loop-allowing factors: the direct product has the loop {f, f} iff every
/// component carries a loop, constraint processes decide it existentially, and
/// the other built-ins never have loops.
bool adjacent(const ProductProcess& proc, const ProductVertex& f, const ProductVertex& g,
              const GraphFamily& fam, const SearchBudget& budget = SearchBudget::standard());

/// Graph on `product_vertices(fam)` (vertex k is the k-th product vertex,
/// labelled "(a,b,...)"), loop-allowing iff some factor has a loop.
Graph build_product(const ProductProcess& proc, const GraphFamily& fam,
                    const SearchBudget& budget = SearchBudget::standard());

struct UniversalConstraintReport {
  std::size_t edges_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Every edge's intrinsic triple must be pairwise disjoint, cover I and have J non-empty.
UniversalConstraintReport check_universal_constraints(const ProductProcess& proc, const GraphFamily& fam,
                                                      const SearchBudget& budget = SearchBudget::standard());

enum class PermutabilityOutcome { Confirmed, StructureViolated, NotAnIsomorphism };

struct PermutabilityReport {
  PermutabilityOutcome outcome = PermutabilityOutcome::Confirmed;
  std::string witness;
};

std::string_view to_string(PermutabilityOutcome outcome);

/// Family with factor i replaced by factor p(i); structure is carried over.
GraphFamily permute_family(const GraphFamily& fam, const std::vector<std::size_t>& permutation);
/// (p(f))(i) = f(p(i)).
ProductVertex permute_vertex(const ProductVertex& f, const std::vector<std::size_t>& permutation);

/// `permutation` maps index positions to index positions. Checks that it
/// respects the structure the process uses (order: only the identity; D: onto
/// itself), then that the induced bijection is an isomorphism
/// P(G_i | i in I) -> P(G_p(i) | i in I). Throws PreconditionViolated if
/// `permutation` is not a bijection of the positions.
PermutabilityReport check_permutability(const ProductProcess& proc, const GraphFamily& fam,
                                        const std::vector<std::size_t>& permutation,
                                        const SearchBudget& budget = SearchBudget::standard());

}  // namespace gtensor
