#pragma once

// Tensor products of homomorphism families, hom-preservation, the graph of a
// homomorphism, and the map α comparing Γ(⊗Φ) with P({Γ(φ_i)}).

#include <cstddef>
#include <string>
#include <vector>

#include "gtensor/graph.hpp"
#include "gtensor/product.hpp"

namespace gtensor {

/// Φ = {φ_i : G_i -> H_i}. Source and target share the index list.
class HomFamily {
 public:
  /// Throws InvalidFamily on index or vertex-set mismatch, NotAHomomorphism
  /// when some φ_i is not edge-preserving.
  static HomFamily make(GraphFamily source, GraphFamily target, std::vector<VertexMap> homs);

  const GraphFamily& source() const { return source_; }
  const GraphFamily& target() const { return target_; }
  const VertexMap& hom(std::size_t i) const { return homs_.at(i); }
  const std::vector<VertexMap>& homs() const { return homs_; }

  /// φ(f)(i) = φ_i(f(i)).
  ProductVertex apply(const ProductVertex& f) const;

 private:
  HomFamily(GraphFamily source, GraphFamily target, std::vector<VertexMap> homs)
      : source_(std::move(source)), target_(std::move(target)), homs_(std::move(homs)) {}

  GraphFamily source_;
  GraphFamily target_;
  std::vector<VertexMap> homs_;
};

/// ⊗Φ between the discrete product carriers.
VertexMap product_of_homs(const HomFamily& hf, const SearchBudget& budget = SearchBudget::standard());
/// ⊗Φ as a vertex map P(G) -> P(H).
VertexMap product_of_homs(const ProductProcess& proc, const HomFamily& hf,
                          const SearchBudget& budget = SearchBudget::standard());

struct HomPreservingReport {
  bool homomorphism = true;
  bool jkl_preserved = true;  ///< J and K of every edge equal those of its image
  std::size_t edges_checked = 0;
  std::string witness;        ///< first failing edge
  bool ok() const { return homomorphism && jkl_preserved; }
};

HomPreservingReport check_hom_preserving(const ProductProcess& proc, const HomFamily& hf,
                                         const SearchBudget& budget = SearchBudget::standard());

struct SquareReport {
  bool factor_homomorphism = true;  ///< φ_i : P(G_i) -> P(H_i)
  bool square_commutes = true;      ///< π_i ∘ φ = φ_i ∘ π_i
  std::string witness;
  bool ok() const { return factor_homomorphism && square_commutes; }
};

/// Throws PreconditionViolated outside the L = empty class.
SquareReport check_lemma6(const ProductProcess& proc, const HomFamily& hf, std::size_t index,
                          const SearchBudget& budget = SearchBudget::standard());

/// Γ(φ): vertices "(x|φx)" in domain order, edges between distinct vertices
/// with adjacent images. Simple. Throws NotAHomomorphism.
Graph graph_of_hom(const VertexMap& m);

struct AlphaReport {
  bool bijective = false;
  bool preserves_adjacency = false;
  bool reflects_adjacency = false;
  std::size_t gamma_edges = 0;    ///< |E Γ(⊗Φ)|
  std::size_t product_edges = 0;  ///< |E P({Γ(φ_i)})|
  std::string witness;            ///< first pair where the two sides disagree
  bool ok() const { return bijective && preserves_adjacency && reflects_adjacency; }
};

/// α : (f, φ(f)) -> f*, f*(i) = (f(i), φ_i(f(i))). Throws PreconditionViolated
/// outside the L = empty class.
AlphaReport check_theorem7(const ProductProcess& proc, const HomFamily& hf,
                           const SearchBudget& budget = SearchBudget::standard());

}  // namespace gtensor
