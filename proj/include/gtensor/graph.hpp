#pragma once

// Finite loop-allowing graphs, vertex maps, homomorphism enumeration and
// isomorphism search.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gtensor/error.hpp"

namespace gtensor {

/// Unordered vertex pair stored as (min, max) of vertex positions; a loop has
/// first == second.
using Edge = std::pair<std::size_t, std::size_t>;

constexpr Edge make_edge(std::size_t a, std::size_t b) noexcept {
  return a <= b ? Edge{a, b} : Edge{b, a};
}

using LabelPair = std::pair<std::string, std::string>;

/// A finite graph whose edges are unordered vertex pairs, loops permitted when
/// `loops_allowed()` is set. Vertices keep the order in which they were
/// declared; that order drives every deterministic enumeration in the library.
class Graph {
 public:
  /// Validating constructor. Duplicate labels and duplicate edges are merged.
  static Graph make(std::vector<std::string> labels, std::span<const LabelPair> edges,
                    bool loops_allowed);
  static Graph make(std::vector<std::string> labels, std::initializer_list<LabelPair> edges,
                    bool loops_allowed);
  /// Same checks as `make`, with edges given as vertex positions.
  static Graph from_indices(std::vector<std::string> labels, std::vector<Edge> edges,
                            bool loops_allowed);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownVertex.
  std::size_t index_of(std::string_view label) const;

  bool adjacent(std::size_t u, std::size_t v) const noexcept { return adjacency_[u * order() + v]; }
  bool has_loop(std::size_t v) const noexcept { return adjacent(v, v); }
  bool loops_allowed() const noexcept { return loops_allowed_; }
  bool has_loops() const noexcept;
  std::size_t loop_count() const noexcept;
  /// Number of distinct neighbours, counting the vertex itself when it has a loop.
  std::size_t degree(std::size_t v) const noexcept;

  /// Sorted, normalized edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<LabelPair> edge_labels() const;

  /// Label-sensitive equality: same vertex labels and same labelled edges,
  /// independent of declaration order and of the loops_allowed flag. Clone-ness is `find_isomorphism`.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph() = default;

  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> position_;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
  bool loops_allowed_ = false;
};

/// Edgeless graph on the given labels (a bare vertex carrier).
Graph discrete_graph(std::vector<std::string> labels);

/// Total function between the vertex sets of two graphs, by vertex position.
struct VertexMap {
  Graph domain;
  Graph codomain;
  std::vector<std::size_t> image;

  /// Validates totality and range.
  static VertexMap make(Graph domain, Graph codomain, std::vector<std::size_t> image);
  static VertexMap from_labels(Graph domain, Graph codomain,
                               const std::map<std::string, std::string, std::less<>>& assignment);
  static VertexMap identity(const Graph& g);

  std::size_t operator()(std::size_t v) const { return image.at(v); }
  const std::string& image_label(std::string_view label) const;
  std::map<std::string, std::string, std::less<>> as_labels() const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
};

/// `second ∘ first`, matched by vertex label; throws DomainMismatch unless first's
/// codomain and second's domain have the same vertex set.
VertexMap compose(const VertexMap& first, const VertexMap& second);

/// Image pair {m(x), m(y)} of every edge {x, y} must be an edge of the codomain;
/// coinciding images need a loop there.
bool is_homomorphism(const Graph& domain, const Graph& codomain, std::span<const std::size_t> image);
bool is_homomorphism(const VertexMap& m);
/// First domain edge whose image is not a codomain edge.
std::optional<Edge> unpreserved_edge(const Graph& domain, const Graph& codomain,
                                     std::span<const std::size_t> image);
/// Every non-adjacent pair (including x == y without a loop) maps to a non-adjacent pair.
bool preserves_non_adjacency(const VertexMap& m);

/// Calls `visit` for each homomorphism G -> H in lexicographic order of the
/// image vector; `visit` returns false to stop. Throws SearchBudgetExceeded when
/// |V_H|^|V_G| exceeds the budget.
void for_each_homomorphism(const Graph& g, const Graph& h, const SearchBudget& budget,
                           const std::function<bool(std::span<const std::size_t>)>& visit);
std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h,
                                               const SearchBudget& budget = SearchBudget::standard());

/// Bijection preserving adjacency and non-adjacency (loops included), or
/// nullopt. Backtracking with degree pruning; node visits count against the budget.
std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h,
                                          const SearchBudget& budget = SearchBudget::standard());
bool are_clones(const Graph& g, const Graph& h, const SearchBudget& budget = SearchBudget::standard());

/// Vertices are tagged "<position>:<label>" by summand position.
Graph disjoint_union(std::span<const Graph> graphs);
Graph induced_subgraph(const Graph& g, std::span<const std::string> selection);

}  // namespace gtensor
