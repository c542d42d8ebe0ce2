#pragma once

// Congruences on loop-allowing graphs, quotients and kernels, and the
// projection congruences that turn every projection of a product into a
// homomorphism.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gtensor/graph.hpp"
#include "gtensor/product.hpp"

namespace gtensor {

/// Pair (~, Ê) on `base`: `classes` realizes ~ as a list of vertex-position
/// classes and `ehat` is a set of unordered pairs (loops allowed). Nothing is
/// enforced on construction; `is_congruence` decides validity.
struct Congruence {
  Graph base;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<Edge> ehat;

  /// ι_G = (identity relation, E).
  static Congruence identity(const Graph& g);

  /// Classes sorted internally and by their first member; Ê sorted and deduplicated.
  Congruence canonical() const;
  bool has_identity_partition() const;
};

/// Partition well-formed, E ⊆ Ê, and Ê substitutive under ~.
bool is_congruence(const Congruence& c);

/// Smallest congruence whose relation contains `generators` and whose Ê
/// contains E ∪ `extra_edges`. Throws UnknownVertex.
Congruence congruence_closure(const Graph& g, std::span<const LabelPair> generators,
                              std::span<const LabelPair> extra_edges);

struct Quotient {
  Graph graph;        ///< loop-allowing graph on the classes
  VertexMap natural;  ///< x -> [x], a homomorphism from the base graph
};

/// Class labels are "[rep]" with rep the smallest label in the class, except for
/// the identity partition, whose quotient keeps the original labels.
/// Throws NotACongruence.
Quotient quotient(const Congruence& c);

/// (x ~ y iff m(x) = m(y), Ê = {uv | m(u)m(v) ∈ E_H}). Throws NotAHomomorphism.
Congruence kernel(const VertexMap& m);

/// θ_i = (identity, E_i ∪ {f(i)g(i) | fg ∈ EP}) on factor `index` (a position).
/// Throws UnknownIndex.
Congruence projection_congruence(const ProductProcess& proc, const GraphFamily& fam, std::size_t index,
                                 const SearchBudget& budget = SearchBudget::standard());

/// P(G_i) = G_i / θ_i, on the original vertex labels.
Graph p_of_factor(const ProductProcess& proc, const GraphFamily& fam, std::size_t index,
                  const SearchBudget& budget = SearchBudget::standard());

/// The family {P(G_i) | i in I}, with the original structure.
GraphFamily quotient_family(const ProductProcess& proc, const GraphFamily& fam,
                            const SearchBudget& budget = SearchBudget::standard());

/// Projection f -> f(index) as a vertex map P(G) -> P(G_index).
VertexMap projection_map(const Graph& product, const GraphFamily& fam, std::size_t index, const Graph& target);

struct HomomorphismReport {
  bool ok = true;
  std::string witness;  ///< first failing edge, when !ok
};

/// Is π_i : P(G) -> P(G_i) a homomorphism?
HomomorphismReport check_projection_hom(const ProductProcess& proc, const GraphFamily& fam, std::size_t index,
                                        const SearchBudget& budget = SearchBudget::standard());

struct InclusionReport {
  bool included = true;  ///< EP ⊆ E_×
  bool equal = false;    ///< EP = E_×
  std::size_t product_edges = 0;
  std::size_t direct_edges = 0;
  std::string witness;   ///< edge of P(G) missing from the direct product, when !included
};

/// The identity on V is a homomorphism P(G) -> ×_i P(G_i).
InclusionReport check_theorem2(const ProductProcess& proc, const GraphFamily& fam,
                               const SearchBudget& budget = SearchBudget::standard());

}  // namespace gtensor
