#pragma once

// P-morphisms and a bounded verifier for the P-tensor product universal
// property. Targets stand in for "every graph H": a failure is a genuine
// counterexample, a pass is evidence at the tested scale.

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "gtensor/graph.hpp"
#include "gtensor/product.hpp"

namespace gtensor {

/// Discrete graph on the product vertex labels, in product order.
Graph product_carrier(const GraphFamily& fam, const SearchBudget& budget = SearchBudget::standard());

/// `d` is read as a map V -> H by position; its domain must list the product
/// vertices in product order and its codomain must have H's vertex set.
/// Throws DomainMismatch.
bool is_p_morphism(const VertexMap& d, const ProductProcess& proc, const GraphFamily& fam, const Graph& h,
                   const SearchBudget& budget = SearchBudget::standard());

/// (φ, T) with φ : V -> V_T. `phi.codomain` is T.
struct TensorCandidate {
  VertexMap phi;

  const Graph& target() const { return phi.codomain; }

  /// (id_V, P(G)).
  static TensorCandidate canonical(const ProductProcess& proc, const GraphFamily& fam,
                                   const SearchBudget& budget = SearchBudget::standard());
};

struct TensorReport {
  std::string condition = "ii";  ///< "pre", "i" or "ii": the condition that decided the outcome
  bool passed = true;
  std::string reason;
  std::optional<std::size_t> witness_target;  ///< position in the target list
  std::optional<VertexMap> witness_delta;
  std::size_t factor_found = 0;  ///< factorizations δ = δ* ∘ φ found
};

/// One line: condition, status, witness_target, witness_delta, factor_found.
std::string to_string(const TensorReport& r);

TensorReport verify_tensor_product(const TensorCandidate& cand, const ProductProcess& proc, const GraphFamily& fam,
                                   std::span<const Graph> targets,
                                   const SearchBudget& budget = SearchBudget::standard());

/// id_V* : T -> P(G) with id_V = id_V* ∘ φ and φ ∘ id_V* = id_{V_T}.
/// Throws PreconditionViolated when the candidate fails against {P(G)} and
/// NoFactorization when either equation fails.
VertexMap extract_isomorphism(const TensorCandidate& cand, const ProductProcess& proc, const GraphFamily& fam,
                              const SearchBudget& budget = SearchBudget::standard());

struct CloneReport {
  bool first_bijective = false;
  bool second_bijective = false;
  bool first_reflects = false;   ///< m1 preserves non-adjacency
  bool second_reflects = false;  ///< m2 preserves non-adjacency
  bool ok() const { return first_bijective && second_bijective && first_reflects && second_reflects; }
};

/// m1 : H1 -> H2 and m2 : H2 -> H1 are mutually inverse homomorphisms.
/// Throws PreconditionViolated otherwise.
CloneReport check_lemma4(const VertexMap& m1, const VertexMap& m2);

}  // namespace gtensor
