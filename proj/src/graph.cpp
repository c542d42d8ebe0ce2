#include "gtensor/graph.hpp"

#include <algorithm>
#include <set>

namespace gtensor {

Graph Graph::from_indices(std::vector<std::string> labels, std::vector<Edge> edges,
                          bool loops_allowed) {
  if (labels.empty()) throw Error(ErrorKind::EmptyVertexSet, "a graph needs at least one vertex");
  Graph g;
  g.loops_allowed_ = loops_allowed;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!g.position_.emplace(labels[i], i).second) {
      throw Error(ErrorKind::DuplicateVertex, "vertex '" + labels[i] + "' declared twice");
    }
  }
  g.labels_ = std::move(labels);
  const std::size_t n = g.labels_.size();
  g.adjacency_.assign(n * n, false);
  for (Edge& e : edges) {
    if (e.first >= n || e.second >= n) {
      throw Error(ErrorKind::DanglingEndpoint, "edge endpoint out of range");
    }
    e = make_edge(e.first, e.second);
    if (e.first == e.second && !loops_allowed) {
      throw Error(ErrorKind::LoopForbidden, "loop at '" + g.labels_[e.first] + "' in a simple graph");
    }
    g.adjacency_[e.first * n + e.second] = true;
    g.adjacency_[e.second * n + e.first] = true;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::make(std::vector<std::string> labels, std::span<const LabelPair> edges,
                  bool loops_allowed) {
  std::vector<std::string> unique_labels;
  std::set<std::string, std::less<>> seen;
  for (std::string& label : labels) {
    if (seen.insert(label).second) unique_labels.push_back(std::move(label));
  }
  if (unique_labels.empty()) throw Error(ErrorKind::EmptyVertexSet, "a graph needs at least one vertex");

  auto position = [&](const std::string& label) {
    const auto it = std::find(unique_labels.begin(), unique_labels.end(), label);
    if (it == unique_labels.end()) {
      throw Error(ErrorKind::DanglingEndpoint, "edge endpoint '" + label + "' is not a vertex");
    }
    return static_cast<std::size_t>(it - unique_labels.begin());
  };
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) indexed.push_back(make_edge(position(a), position(b)));
  return from_indices(std::move(unique_labels), std::move(indexed), loops_allowed);
}

Graph Graph::make(std::vector<std::string> labels, std::initializer_list<LabelPair> edges,
                  bool loops_allowed) {
  return make(std::move(labels), std::span<const LabelPair>(edges.begin(), edges.size()), loops_allowed);
}

std::optional<std::size_t> Graph::find(std::string_view label) const {
  if (const auto it = position_.find(label); it != position_.end()) return it->second;
  return std::nullopt;
}

std::size_t Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorKind::UnknownVertex, "no vertex '" + std::string(label) + "'");
}

bool Graph::has_loops() const noexcept { return loop_count() > 0; }

std::size_t Graph::loop_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; }));
}

std::size_t Graph::degree(std::size_t v) const noexcept {
  std::size_t d = 0;
  for (std::size_t w = 0; w < order(); ++w) d += adjacent(v, w) ? 1 : 0;
  return d;
}

std::vector<LabelPair> Graph::edge_labels() const {
  std::vector<LabelPair> out;
  out.reserve(edges_.size());
  for (const auto& [u, v] : edges_) out.emplace_back(labels_[u], labels_[v]);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> to_b(a.order());
  for (std::size_t v = 0; v < a.order(); ++v) {
    const auto w = b.find(a.labels_[v]);
    if (!w) return false;
    to_b[v] = *w;
  }
  return std::all_of(a.edges_.begin(), a.edges_.end(),
                     [&](const Edge& e) { return b.adjacent(to_b[e.first], to_b[e.second]); });
}

Graph discrete_graph(std::vector<std::string> labels) {
  return Graph::from_indices(std::move(labels), {}, false);
}

// --- VertexMap ---------------------------------------------------------------

VertexMap VertexMap::make(Graph domain, Graph codomain, std::vector<std::size_t> image) {
  if (image.size() != domain.order()) {
    throw Error(ErrorKind::DomainMismatch, "vertex map is not total on its domain");
  }
  for (std::size_t w : image) {
    if (w >= codomain.order()) throw Error(ErrorKind::UnknownVertex, "vertex map leaves its codomain");
  }
  return VertexMap{std::move(domain), std::move(codomain), std::move(image)};
}

VertexMap VertexMap::from_labels(Graph domain, Graph codomain,
                                 const std::map<std::string, std::string, std::less<>>& assignment) {
  std::vector<std::size_t> image(domain.order());
  for (std::size_t v = 0; v < domain.order(); ++v) {
    const auto it = assignment.find(domain.label(v));
    if (it == assignment.end()) {
      throw Error(ErrorKind::DomainMismatch, "no image for vertex '" + domain.label(v) + "'");
    }
    image[v] = codomain.index_of(it->second);
  }
  for (const auto& [from, to] : assignment) domain.index_of(from);
  return VertexMap{std::move(domain), std::move(codomain), std::move(image)};
}

VertexMap VertexMap::identity(const Graph& g) {
  std::vector<std::size_t> image(g.order());
  for (std::size_t v = 0; v < image.size(); ++v) image[v] = v;
  return VertexMap{g, g, std::move(image)};
}

const std::string& VertexMap::image_label(std::string_view label) const {
  return codomain.label(image.at(domain.index_of(label)));
}

std::map<std::string, std::string, std::less<>> VertexMap::as_labels() const {
  std::map<std::string, std::string, std::less<>> out;
  for (std::size_t v = 0; v < image.size(); ++v) out.emplace(domain.label(v), codomain.label(image[v]));
  return out;
}

bool VertexMap::is_injective() const {
  std::vector<bool> hit(codomain.order(), false);
  for (std::size_t w : image) {
    if (hit[w]) return false;
    hit[w] = true;
  }
  return true;
}

bool VertexMap::is_surjective() const {
  std::vector<bool> hit(codomain.order(), false);
  for (std::size_t w : image) hit[w] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

VertexMap compose(const VertexMap& first, const VertexMap& second) {
  if (first.codomain.order() != second.domain.order()) {
    throw Error(ErrorKind::DomainMismatch, "cannot compose: vertex sets differ");
  }
  std::vector<std::size_t> relabel(first.codomain.order());
  for (std::size_t w = 0; w < relabel.size(); ++w) {
    const auto at = second.domain.find(first.codomain.label(w));
    if (!at) throw Error(ErrorKind::DomainMismatch, "cannot compose: vertex sets differ");
    relabel[w] = *at;
  }
  std::vector<std::size_t> image(first.image.size());
  for (std::size_t v = 0; v < image.size(); ++v) image[v] = second.image[relabel[first.image[v]]];
  return VertexMap{first.domain, second.codomain, std::move(image)};
}

// --- homomorphisms -----------------------------------------------------------

std::optional<Edge> unpreserved_edge(const Graph& domain, const Graph& codomain,
                                     std::span<const std::size_t> image) {
  for (const auto& [u, v] : domain.edges()) {
    if (!codomain.adjacent(image[u], image[v])) return Edge{u, v};
  }
  return std::nullopt;
}

bool is_homomorphism(const Graph& domain, const Graph& codomain, std::span<const std::size_t> image) {
  return !unpreserved_edge(domain, codomain, image).has_value();
}

bool is_homomorphism(const VertexMap& m) { return is_homomorphism(m.domain, m.codomain, m.image); }

bool preserves_non_adjacency(const VertexMap& m) {
  const Graph& g = m.domain;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u; v < g.order(); ++v) {
      if (!g.adjacent(u, v) && m.codomain.adjacent(m.image[u], m.image[v])) return false;
    }
  }
  return true;
}

void for_each_homomorphism(const Graph& g, const Graph& h, const SearchBudget& budget,
                           const std::function<bool(std::span<const std::size_t>)>& visit) {
  require_within(budget, saturating_pow(h.order(), g.order()), "homomorphism enumeration");
  const std::size_t n = g.order();
  std::vector<std::size_t> image(n, 0);
  bool keep_going = true;

  // Assign vertices in declaration order; check every edge to an already
  // assigned vertex (and the loop, if any) before descending.
  std::function<void(std::size_t)> extend = [&](std::size_t v) {
    if (!keep_going) return;
    if (v == n) {
      keep_going = visit(image);
      return;
    }
    for (std::size_t w = 0; w < h.order() && keep_going; ++w) {
      image[v] = w;
      bool ok = true;
      for (std::size_t u = 0; u <= v && ok; ++u) {
        if (g.adjacent(u, v) && !h.adjacent(image[u], w)) ok = false;
      }
      if (ok) extend(v + 1);
    }
  };
  extend(0);
}

std::vector<VertexMap> enumerate_homomorphisms(const Graph& g, const Graph& h, const SearchBudget& budget) {
  std::vector<VertexMap> out;
  for_each_homomorphism(g, h, budget, [&](std::span<const std::size_t> image) {
    out.push_back(VertexMap{g, h, {image.begin(), image.end()}});
    return true;
  });
  return out;
}

std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h, const SearchBudget& budget) {
  const std::size_t n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count() || g.loop_count() != h.loop_count()) {
    return std::nullopt;
  }
  std::vector<std::size_t> deg_g(n), deg_h(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg_g[v] = g.degree(v);
    deg_h[v] = h.degree(v);
  }
  {
    auto a = deg_g, b = deg_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::uint64_t visits = 0;

  std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || deg_g[v] != deg_h[w] || g.has_loop(v) != h.has_loop(w)) continue;
      if (++visits > budget.cap) require_within(budget, visits, "isomorphism search");
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        if (g.adjacent(u, v) != h.adjacent(image[u], w)) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return VertexMap{g, h, std::move(image)};
}

bool are_clones(const Graph& g, const Graph& h, const SearchBudget& budget) {
  return find_isomorphism(g, h, budget).has_value();
}

// --- constructions -------------------------------------------------------------

Graph disjoint_union(std::span<const Graph> graphs) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  bool loops = false;
  for (std::size_t s = 0; s < graphs.size(); ++s) {
    const Graph& g = graphs[s];
    const std::size_t offset = labels.size();
    for (const auto& label : g.labels()) labels.push_back(std::to_string(s) + ":" + label);
    for (const auto& [u, v] : g.edges()) edges.emplace_back(offset + u, offset + v);
    loops = loops || g.loops_allowed();
  }
  return Graph::from_indices(std::move(labels), std::move(edges), loops);
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> selection) {
  if (selection.empty()) throw Error(ErrorKind::EmptySelection, "induced subgraph needs a vertex");
  std::vector<std::size_t> picked;
  for (const auto& label : selection) {
    const std::size_t v = g.index_of(label);
    if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
  }
  std::sort(picked.begin(), picked.end());
  std::vector<std::string> labels;
  for (std::size_t v : picked) labels.push_back(g.label(v));
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < picked.size(); ++a) {
    for (std::size_t b = a; b < picked.size(); ++b) {
      if (g.adjacent(picked[a], picked[b])) edges.emplace_back(a, b);
    }
  }
  return Graph::from_indices(std::move(labels), std::move(edges), g.loops_allowed());
}

}  // namespace gtensor
