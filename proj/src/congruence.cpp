#include "gtensor/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gtensor {

namespace {

// Class id per vertex, or an empty vector when `classes` is not a partition.
std::vector<std::size_t> class_ids(const Congruence& c) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(c.base.order(), kUnset);
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    if (c.classes[k].empty()) return {};
    for (std::size_t v : c.classes[k]) {
      if (v >= id.size() || id[v] != kUnset) return {};
      id[v] = k;
    }
  }
  if (std::find(id.begin(), id.end(), kUnset) != id.end()) return {};
  return id;
}

std::vector<Edge> sorted_unique(std::vector<Edge> edges) {
  for (Edge& e : edges) e = make_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

Congruence Congruence::identity(const Graph& g) {
  Congruence c{g, {}, g.edges()};
  for (std::size_t v = 0; v < g.order(); ++v) c.classes.push_back({v});
  return c;
}

Congruence Congruence::canonical() const {
  Congruence out{base, classes, sorted_unique(ehat)};
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

bool Congruence::has_identity_partition() const {
  return classes.size() == base.order() &&
         std::all_of(classes.begin(), classes.end(), [](const auto& cls) { return cls.size() == 1; });
}

bool is_congruence(const Congruence& c) {
  const auto id = class_ids(c);
  if (id.empty()) return false;
  const std::size_t n = c.base.order();
  std::set<Edge> ehat;
  for (const Edge& e : c.ehat) {
    if (e.first >= n || e.second >= n) return false;
    ehat.insert(make_edge(e.first, e.second));
  }
  for (const Edge& e : c.base.edges()) {
    if (!ehat.contains(e)) return false;
  }
  // Substitutivity: every pair of members of the two classes must be in Ê.
  for (const Edge& e : ehat) {
    for (std::size_t x : c.classes[id[e.first]]) {
      for (std::size_t y : c.classes[id[e.second]]) {
        if (!ehat.contains(make_edge(x, y))) return false;
      }
    }
  }
  return true;
}

Congruence congruence_closure(const Graph& g, std::span<const LabelPair> generators,
                              std::span<const LabelPair> extra_edges) {
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : generators) {
    const std::size_t ra = find(g.index_of(a)), rb = find(g.index_of(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }

  Congruence c{g, {}, {}};
  std::vector<std::size_t> class_of(n);
  {
    std::vector<std::size_t> slot(n, n);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t r = find(v);
      if (slot[r] == n) {
        slot[r] = c.classes.size();
        c.classes.emplace_back();
      }
      class_of[v] = slot[r];
      c.classes[slot[r]].push_back(v);
    }
  }

  // Worklist over class pairs: each seed pair of Ê lifts to its class pair,
  // which contributes every member pair.
  std::set<Edge> class_pairs;
  std::vector<Edge> worklist = g.edges();
  for (const auto& [a, b] : extra_edges) worklist.push_back(make_edge(g.index_of(a), g.index_of(b)));
  std::set<Edge> ehat;
  while (!worklist.empty()) {
    const Edge e = worklist.back();
    worklist.pop_back();
    if (!class_pairs.insert(make_edge(class_of[e.first], class_of[e.second])).second) continue;
    for (std::size_t x : c.classes[class_of[e.first]]) {
      for (std::size_t y : c.classes[class_of[e.second]]) ehat.insert(make_edge(x, y));
    }
  }
  c.ehat.assign(ehat.begin(), ehat.end());
  return c;
}

Quotient quotient(const Congruence& c) {
  if (!is_congruence(c)) throw Error(ErrorKind::NotACongruence, "quotient needs a congruence");
  const Congruence canon = c.canonical();
  const auto id = class_ids(canon);
  const bool identity = canon.has_identity_partition();

  std::vector<std::string> labels;
  for (const auto& cls : canon.classes) {
    std::string rep = canon.base.label(cls.front());
    for (std::size_t v : cls) rep = std::min(rep, canon.base.label(v));
    labels.push_back(identity ? rep : "[" + rep + "]");
  }
  std::vector<Edge> edges;
  for (const Edge& e : canon.ehat) edges.push_back(make_edge(id[e.first], id[e.second]));
  Graph graph = Graph::from_indices(std::move(labels), sorted_unique(std::move(edges)), true);
  VertexMap natural{canon.base, graph, id};
  return Quotient{std::move(graph), std::move(natural)};
}

Congruence kernel(const VertexMap& m) {
  if (!is_homomorphism(m)) throw Error(ErrorKind::NotAHomomorphism, "kernel needs a homomorphism");
  const Graph& g = m.domain;
  Congruence c{g, {}, {}};
  std::vector<std::size_t> slot(m.codomain.order(), m.codomain.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    const std::size_t w = m.image[v];
    if (slot[w] == m.codomain.order()) {
      slot[w] = c.classes.size();
      c.classes.emplace_back();
    }
    c.classes[slot[w]].push_back(v);
  }
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u; v < g.order(); ++v) {
      if (m.codomain.adjacent(m.image[u], m.image[v])) c.ehat.emplace_back(u, v);
    }
  }
  return c;
}

Congruence projection_congruence(const ProductProcess& proc, const GraphFamily& fam, std::size_t index,
                                 const SearchBudget& budget) {
  if (index >= fam.size()) throw Error(ErrorKind::UnknownIndex, "index position out of range");
  const Graph product = build_product(proc, fam, budget);
  const auto vertices = product_vertices(fam, budget);
  Congruence c = Congruence::identity(fam.factor(index));
  for (const auto& [u, v] : product.edges()) c.ehat.push_back(make_edge(vertices[u][index], vertices[v][index]));
  c.ehat = sorted_unique(std::move(c.ehat));
  return c;
}

Graph p_of_factor(const ProductProcess& proc, const GraphFamily& fam, std::size_t index,
                  const SearchBudget& budget) {
  return quotient(projection_congruence(proc, fam, index, budget)).graph;
}

GraphFamily quotient_family(const ProductProcess& proc, const GraphFamily& fam, const SearchBudget& budget) {
  std::vector<Graph> factors;
  for (std::size_t i = 0; i < fam.size(); ++i) factors.push_back(p_of_factor(proc, fam, i, budget));
  return fam.with_factors(std::move(factors));
}

VertexMap projection_map(const Graph& product, const GraphFamily& fam, std::size_t index, const Graph& target) {
  const auto vertices = product_vertices(fam);
  std::vector<std::size_t> image;
  image.reserve(vertices.size());
  for (const auto& f : vertices) image.push_back(target.index_of(fam.factor(index).label(f[index])));
  return VertexMap::make(product, target, std::move(image));
}

HomomorphismReport check_projection_hom(const ProductProcess& proc, const GraphFamily& fam, std::size_t index,
                                        const SearchBudget& budget) {
  const Graph product = build_product(proc, fam, budget);
  const Graph target = p_of_factor(proc, fam, index, budget);
  const VertexMap pi = projection_map(product, fam, index, target);
  if (const auto bad = unpreserved_edge(pi.domain, pi.codomain, pi.image)) {
    return {false, product.label(bad->first) + product.label(bad->second)};
  }
  return {true, {}};
}

InclusionReport check_theorem2(const ProductProcess& proc, const GraphFamily& fam, const SearchBudget& budget) {
  const Graph product = build_product(proc, fam, budget);
  const Graph direct = build_product(ProductProcess::builtin(BuiltinProduct::Direct),
                                     quotient_family(proc, fam, budget), budget);
  InclusionReport report;
  report.product_edges = product.edge_count();
  report.direct_edges = direct.edge_count();
  // Both graphs list the same product vertices in the same order.
  for (const auto& [u, v] : product.edges()) {
    if (!direct.adjacent(u, v)) {
      report.included = false;
      report.witness = product.label(u) + product.label(v);
      break;
    }
  }
  report.equal = report.included && report.product_edges == report.direct_edges;
  return report;
}

}  // namespace gtensor
