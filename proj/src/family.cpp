#include "gtensor/family.hpp"

#include <algorithm>
#include <set>

namespace gtensor {

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

namespace {

std::vector<std::size_t> resolve(const std::vector<std::string>& index, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& label : labels) {
    const auto it = std::find(index.begin(), index.end(), label);
    if (it == index.end()) throw Error(ErrorKind::UnknownIndex, "no index '" + label + "'");
    out.push_back(static_cast<std::size_t>(it - index.begin()));
  }
  return out;
}

}  // namespace

GraphFamily GraphFamily::make(std::vector<std::string> index, std::vector<Graph> factors,
                              std::optional<std::vector<std::string>> order,
                              std::optional<std::vector<std::string>> distinguished) {
  if (index.empty()) throw Error(ErrorKind::InvalidFamily, "index set is empty");
  if (index.size() > IndexSet::kMaxIndices) throw Error(ErrorKind::InvalidFamily, "more than 64 indices");
  if (index.size() != factors.size()) throw Error(ErrorKind::InvalidFamily, "one factor per index required");
  if (std::set<std::string>(index.begin(), index.end()).size() != index.size()) {
    throw Error(ErrorKind::InvalidFamily, "duplicate index label");
  }
  GraphFamily fam;
  fam.index_ = std::move(index);
  fam.factors_ = std::move(factors);
  if (order) {
    auto positions = resolve(fam.index_, *order);
    auto sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != fam.index_.size() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::InvalidFamily, "order must list every index exactly once");
    }
    fam.order_ = std::move(positions);
  }
  if (distinguished) {
    IndexSet d;
    for (std::size_t i : resolve(fam.index_, *distinguished)) d.insert(i);
    if (d.empty()) throw Error(ErrorKind::InvalidFamily, "distinguished set D must be non-empty");
    fam.distinguished_ = d;
  }
  return fam;
}

std::size_t GraphFamily::position_of(std::string_view label) const {
  const auto it = std::find(index_.begin(), index_.end(), label);
  if (it == index_.end()) throw Error(ErrorKind::UnknownIndex, "no index '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - index_.begin());
}

bool GraphFamily::any_loops() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Graph& g) { return g.has_loops(); });
}

std::vector<std::size_t> GraphFamily::order_ranks() const {
  if (!order_) throw Error(ErrorKind::MissingStructure, "no order on the index set");
  std::vector<std::size_t> rank(size());
  for (std::size_t r = 0; r < order_->size(); ++r) rank[(*order_)[r]] = r;
  return rank;
}

GraphFamily GraphFamily::with_order(std::vector<std::string> order) const {
  std::optional<std::vector<std::string>> d;
  if (distinguished_) {
    d.emplace();
    for (std::size_t i : distinguished_->members()) d->push_back(index_[i]);
  }
  return make(index_, factors_, std::move(order), std::move(d));
}

GraphFamily GraphFamily::with_distinguished(std::vector<std::string> distinguished) const {
  GraphFamily copy = make(index_, factors_, std::nullopt, std::move(distinguished));
  copy.order_ = order_;
  return copy;
}

GraphFamily GraphFamily::with_factors(std::vector<Graph> factors) const {
  if (factors.size() != factors_.size()) throw Error(ErrorKind::InvalidFamily, "one factor per index required");
  GraphFamily copy = *this;
  copy.factors_ = std::move(factors);
  return copy;
}

std::uint64_t GraphFamily::product_size() const {
  std::uint64_t n = 1;
  for (const Graph& g : factors_) n = saturating_mul(n, g.order());
  return n;
}

std::string product_label(const ProductVertex& f, const GraphFamily& fam) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    if (i > 0) out += ',';
    out += fam.factor(i).label(f.components[i]);
  }
  out += ')';
  return out;
}

std::vector<ProductVertex> product_vertices(const GraphFamily& fam, const SearchBudget& budget) {
  require_within(budget, fam.product_size(), "product vertex set");
  const std::size_t n = fam.size();
  std::vector<ProductVertex> out;
  out.reserve(fam.product_size());
  ProductVertex f{std::vector<std::size_t>(n, 0)};
  while (true) {
    out.push_back(f);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++f.components[i] < fam.factor(i).order()) break;
      f.components[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::size_t product_rank(const ProductVertex& f, const GraphFamily& fam) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < fam.size(); ++i) rank = rank * fam.factor(i).order() + f.components[i];
  return rank;
}

JklTriple jkl_unchecked(const ProductVertex& f, const ProductVertex& g, const GraphFamily& fam) {
  JklTriple t;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const bool edge = fam.factor(i).adjacent(f[i], g[i]);
    const bool equal = f[i] == g[i];
    if (edge) t.j.insert(i);
    if (equal) t.k.insert(i);
    if (!edge && !equal) t.l.insert(i);
  }
  return t;
}

JklTriple jkl(const ProductVertex& f, const ProductVertex& g, const GraphFamily& fam) {
  if (f == g) throw Error(ErrorKind::EqualVertices, "JKL triples are defined on pairs of distinct vertices");
  return jkl_unchecked(f, g, fam);
}

std::string format_index_set(IndexSet s, const GraphFamily& fam) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.members()) {
    if (!first) out += ',';
    out += fam.index_label(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace gtensor
