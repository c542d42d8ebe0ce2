#include "gtensor/product.hpp"

#include <algorithm>

namespace gtensor {

std::optional<BuiltinProduct> parse_builtin(std::string_view name) {
  if (name == "cartesian") return BuiltinProduct::Cartesian;
  if (name == "direct") return BuiltinProduct::Direct;
  if (name == "strong") return BuiltinProduct::Strong;
  if (name == "lex" || name == "lexicographic") return BuiltinProduct::Lexicographic;
  if (name == "d" || name == "d_product") return BuiltinProduct::DProduct;
  return std::nullopt;
}

std::optional<BuiltinProduct> ProductProcess::builtin_kind() const {
  if (const auto* kind = std::get_if<BuiltinProduct>(&rule_)) return *kind;
  return std::nullopt;
}

bool ProductProcess::needs_order() const {
  if (const auto kind = builtin_kind()) return *kind == BuiltinProduct::Lexicographic;
  return spec()->needs_order();
}

bool ProductProcess::needs_distinguished() const {
  if (const auto kind = builtin_kind()) return *kind == BuiltinProduct::DProduct;
  return spec()->needs_distinguished();
}

bool ProductProcess::forces_empty_l() const {
  if (const auto kind = builtin_kind()) {
    return *kind == BuiltinProduct::Cartesian || *kind == BuiltinProduct::Direct ||
           *kind == BuiltinProduct::Strong;
  }
  return spec()->forces_empty_l();
}

void ProductProcess::require_structure(const GraphFamily& fam) const {
  if (needs_order() && !fam.order()) {
    throw Error(ErrorKind::MissingStructure, name() + " needs an order on the index set");
  }
  if (needs_distinguished() && !fam.distinguished()) {
    throw Error(ErrorKind::MissingStructure, name() + " needs a distinguished index set D");
  }
}

std::string ProductProcess::name() const {
  if (const auto kind = builtin_kind()) return std::string(to_string(*kind));
  return "constraints[" + to_string(*spec()) + "]";
}

namespace {

bool builtin_adjacent(BuiltinProduct kind, const ProductVertex& f, const ProductVertex& g,
                      const GraphFamily& fam) {
  const JklTriple t = jkl_unchecked(f, g, fam);
  const IndexSet all = fam.all();
  if (f == g) return kind == BuiltinProduct::Direct && t.j == all;

  switch (kind) {
    case BuiltinProduct::Cartesian:
      // Some j with f(j)g(j) an edge while every other component agrees.
      for (std::size_t j : t.j.members()) {
        if ((all - IndexSet::single(j)).subset_of(t.k)) return true;
      }
      return false;
    case BuiltinProduct::Direct:
      return t.j == all;
    case BuiltinProduct::Strong:
      // A proper K with equality on K and adjacency off K exists iff every
      // component is adjacent or equal and some component is adjacent.
      return t.l.empty() && !t.j.empty();
    case BuiltinProduct::Lexicographic: {
      if (t.j.empty()) return false;
      const auto rank = fam.order_ranks();
      std::size_t first = t.j.members().front();
      for (std::size_t i : t.j.members()) {
        if (rank[i] < rank[first]) first = i;
      }
      for (std::size_t k = 0; k < fam.size(); ++k) {
        if (rank[k] < rank[first] && f[k] != g[k]) return false;
      }
      return true;
    }
    case BuiltinProduct::DProduct:
      return fam.distinguished()->subset_of(t.j);
  }
  return false;
}

}  // namespace

bool adjacent(const ProductProcess& proc, const ProductVertex& f, const ProductVertex& g,
              const GraphFamily& fam, const SearchBudget& budget) {
  proc.require_structure(fam);
  if (const auto kind = proc.builtin_kind()) return builtin_adjacent(*kind, f, g, fam);
  if (f == g && !fam.any_loops()) return false;
  return constraint_witness(*proc.spec(), f, g, fam, budget).has_value();
}

Graph build_product(const ProductProcess& proc, const GraphFamily& fam, const SearchBudget& budget) {
  proc.require_structure(fam);
  const auto vertices = product_vertices(fam, budget);
  const bool loops = fam.any_loops();
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (const auto& f : vertices) labels.push_back(product_label(f, fam));

  std::vector<Edge> edges;
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    for (std::size_t v = loops ? u : u + 1; v < vertices.size(); ++v) {
      if (adjacent(proc, vertices[u], vertices[v], fam, budget)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_indices(std::move(labels), std::move(edges), loops);
}

UniversalConstraintReport check_universal_constraints(const ProductProcess& proc, const GraphFamily& fam,
                                                      const SearchBudget& budget) {
  const Graph product = build_product(proc, fam, budget);
  const auto vertices = product_vertices(fam, budget);
  const IndexSet all = fam.all();
  UniversalConstraintReport report;
  for (const auto& [u, v] : product.edges()) {
    ++report.edges_checked;
    const JklTriple t = jkl_unchecked(vertices[u], vertices[v], fam);
    std::string problem;
    if (!(t.j & t.k).empty() || !(t.j & t.l).empty() || !(t.k & t.l).empty()) problem += " not-disjoint";
    if ((t.j | t.k | t.l) != all) problem += " not-covering";
    if (t.j.empty()) problem += " J-empty";
    if (!problem.empty()) {
      report.violations.push_back(product.label(u) + product.label(v) + ":" + problem);
    }
  }
  return report;
}

std::string_view to_string(PermutabilityOutcome outcome) {
  switch (outcome) {
    case PermutabilityOutcome::Confirmed: return "permutable-confirmed";
    case PermutabilityOutcome::StructureViolated: return "structure-violated";
    case PermutabilityOutcome::NotAnIsomorphism: return "not-an-isomorphism";
  }
  return "?";
}

GraphFamily permute_family(const GraphFamily& fam, const std::vector<std::size_t>& permutation) {
  std::vector<Graph> factors;
  factors.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) factors.push_back(fam.factor(permutation.at(i)));
  return fam.with_factors(std::move(factors));
}

ProductVertex permute_vertex(const ProductVertex& f, const std::vector<std::size_t>& permutation) {
  ProductVertex out{std::vector<std::size_t>(f.components.size())};
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] = f[permutation.at(i)];
  return out;
}

PermutabilityReport check_permutability(const ProductProcess& proc, const GraphFamily& fam,
                                        const std::vector<std::size_t>& permutation,
                                        const SearchBudget& budget) {
  {
    auto sorted = permutation;
    std::sort(sorted.begin(), sorted.end());
    bool bijective = sorted.size() == fam.size();
    for (std::size_t i = 0; bijective && i < sorted.size(); ++i) bijective = sorted[i] == i;
    if (!bijective) throw Error(ErrorKind::PreconditionViolated, "not a permutation of the index set");
  }
  proc.require_structure(fam);

  // The only order-preserving permutation of a finite chain is the identity.
  if (proc.needs_order()) {
    for (std::size_t i = 0; i < permutation.size(); ++i) {
      if (permutation[i] != i) {
        return {PermutabilityOutcome::StructureViolated,
                "moves " + fam.index_label(i) + " and so breaks the order"};
      }
    }
  }
  if (proc.needs_distinguished()) {
    const IndexSet d = *fam.distinguished();
    IndexSet image;
    for (std::size_t i : d.members()) image.insert(permutation[i]);
    if (image != d) {
      return {PermutabilityOutcome::StructureViolated, "does not map D onto itself"};
    }
  }

  const GraphFamily permuted = permute_family(fam, permutation);
  const Graph original = build_product(proc, fam, budget);
  const Graph target = build_product(proc, permuted, budget);
  const auto vertices = product_vertices(fam, budget);
  std::vector<std::size_t> image(vertices.size());
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    image[u] = product_rank(permute_vertex(vertices[u], permutation), permuted);
  }
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    for (std::size_t v = u; v < vertices.size(); ++v) {
      if (original.adjacent(u, v) != target.adjacent(image[u], image[v])) {
        return {PermutabilityOutcome::NotAnIsomorphism,
                original.label(u) + original.label(v) + " vs " + target.label(image[u]) +
                    target.label(image[v])};
      }
    }
  }
  return {PermutabilityOutcome::Confirmed, {}};
}

}  // namespace gtensor
