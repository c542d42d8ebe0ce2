#pragma once

// Indexed graph families, index subsets, product vertices and JKL triples.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtensor/graph.hpp"

namespace gtensor {

/// Subset of an index set, as a bitmask over index positions (at most 64 indices).
class IndexSet {
 public:
  static constexpr std::size_t kMaxIndices = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet full(std::size_t n) {
    return IndexSet(n >= kMaxIndices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr IndexSet single(std::size_t i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;

  std::vector<std::size_t> members() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite indexed family {G_i | i in I}. The index list fixes the positions
/// used everywhere else; `order` (a permutation of positions, smallest first)
/// and `distinguished` are the optional structure some products need.
class GraphFamily {
 public:
  /// Throws InvalidFamily on empty/duplicate/oversized index lists and
  /// UnknownIndex on structure naming indices outside I.
  static GraphFamily make(std::vector<std::string> index, std::vector<Graph> factors,
                          std::optional<std::vector<std::string>> order = std::nullopt,
                          std::optional<std::vector<std::string>> distinguished = std::nullopt);

  std::size_t size() const noexcept { return index_.size(); }
  const std::vector<std::string>& index() const noexcept { return index_; }
  const std::string& index_label(std::size_t i) const { return index_.at(i); }
  /// Throws UnknownIndex.
  std::size_t position_of(std::string_view label) const;

  const Graph& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<Graph>& factors() const noexcept { return factors_; }
  IndexSet all() const { return IndexSet::full(size()); }
  bool any_loops() const;

  const std::optional<std::vector<std::size_t>>& order() const noexcept { return order_; }
  /// Rank of each position under `order`; throws MissingStructure when absent.
  std::vector<std::size_t> order_ranks() const;
  const std::optional<IndexSet>& distinguished() const noexcept { return distinguished_; }

  GraphFamily with_order(std::vector<std::string> order) const;
  GraphFamily with_distinguished(std::vector<std::string> distinguished) const;
  GraphFamily with_factors(std::vector<Graph> factors) const;

  /// Product of factor orders, saturating.
  std::uint64_t product_size() const;

 private:
  GraphFamily() = default;

  std::vector<std::string> index_;
  std::vector<Graph> factors_;
  std::optional<std::vector<std::size_t>> order_;
  std::optional<IndexSet> distinguished_;
};

/// Element of the Cartesian product of the factor vertex sets: component i is
/// a vertex position of factor i.
struct ProductVertex {
  std::vector<std::size_t> components;

  std::size_t operator[](std::size_t i) const { return components[i]; }
  friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// Rendered as "(a,b,...)" from the component labels.
std::string product_label(const ProductVertex& f, const GraphFamily& fam);

/// All product vertices in lexicographic order of components (index position 0
/// most significant). Throws SearchBudgetExceeded past the cap.
std::vector<ProductVertex> product_vertices(const GraphFamily& fam,
                                            const SearchBudget& budget = SearchBudget::standard());

/// Rank of `f` in `product_vertices(fam)`.
std::size_t product_rank(const ProductVertex& f, const GraphFamily& fam);

struct JklTriple {
  IndexSet j;  ///< components adjacent
  IndexSet k;  ///< components equal
  IndexSet l;  ///< neither

  friend bool operator==(const JklTriple&, const JklTriple&) = default;
};

/// Intrinsic triple of an unordered pair. A loop at f(i) = g(i) puts i in both
/// J and K. Throws EqualVertices when f == g.
JklTriple jkl(const ProductVertex& f, const ProductVertex& g, const GraphFamily& fam);
/// Same, without the f != g requirement.
JklTriple jkl_unchecked(const ProductVertex& f, const ProductVertex& g, const GraphFamily& fam);

std::string format_index_set(IndexSet s, const GraphFamily& fam);

}  // namespace gtensor
