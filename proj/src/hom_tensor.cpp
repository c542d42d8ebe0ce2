#include "gtensor/hom_tensor.hpp"

#include "gtensor/congruence.hpp"
#include "gtensor/tensor.hpp"

namespace gtensor {

namespace {

void require_empty_l(const ProductProcess& proc) {
  if (!proc.forces_empty_l()) {
    throw Error(ErrorKind::PreconditionViolated, "process " + proc.name() + " does not force L = empty");
  }
}

std::vector<std::size_t> product_image(const HomFamily& hf, const SearchBudget& budget) {
  std::vector<std::size_t> image;
  for (const auto& f : product_vertices(hf.source(), budget)) image.push_back(product_rank(hf.apply(f), hf.target()));
  return image;
}

}  // namespace

HomFamily HomFamily::make(GraphFamily source, GraphFamily target, std::vector<VertexMap> homs) {
  if (source.index() != target.index() || homs.size() != source.size()) {
    throw Error(ErrorKind::InvalidFamily, "source, target and homomorphisms must share the index list");
  }
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (!(homs[i].domain == source.factor(i)) || !(homs[i].codomain == target.factor(i))) {
      throw Error(ErrorKind::InvalidFamily, "homomorphism " + source.index_label(i) + " does not match its factors");
    }
    // Re-seat on the family's own graphs so positions agree with the factors.
    homs[i] = VertexMap::from_labels(source.factor(i), target.factor(i), homs[i].as_labels());
    if (!is_homomorphism(homs[i])) {
      throw Error(ErrorKind::NotAHomomorphism, "map " + source.index_label(i) + " is not a homomorphism");
    }
  }
  return HomFamily(std::move(source), std::move(target), std::move(homs));
}

ProductVertex HomFamily::apply(const ProductVertex& f) const {
  ProductVertex out;
  out.components.reserve(f.components.size());
  for (std::size_t i = 0; i < f.components.size(); ++i) out.components.push_back(homs_[i].image[f[i]]);
  return out;
}

VertexMap product_of_homs(const HomFamily& hf, const SearchBudget& budget) {
  return VertexMap::make(product_carrier(hf.source(), budget), product_carrier(hf.target(), budget),
                         product_image(hf, budget));
}

VertexMap product_of_homs(const ProductProcess& proc, const HomFamily& hf, const SearchBudget& budget) {
  return VertexMap::make(build_product(proc, hf.source(), budget), build_product(proc, hf.target(), budget),
                         product_image(hf, budget));
}

HomPreservingReport check_hom_preserving(const ProductProcess& proc, const HomFamily& hf,
                                         const SearchBudget& budget) {
  const VertexMap phi = product_of_homs(proc, hf, budget);
  const auto vs = product_vertices(hf.source(), budget);
  const auto ws = product_vertices(hf.target(), budget);
  HomPreservingReport report;
  for (const auto& [u, v] : phi.domain.edges()) {
    ++report.edges_checked;
    const std::size_t pu = phi.image[u], pv = phi.image[v];
    const std::string edge = phi.domain.label(u) + phi.domain.label(v);
    if (!phi.codomain.adjacent(pu, pv)) {
      if (report.ok()) report.witness = edge;
      report.homomorphism = false;
    }
    const JklTriple before = jkl_unchecked(vs[u], vs[v], hf.source());
    const JklTriple after = jkl_unchecked(ws[pu], ws[pv], hf.target());
    if (before.j != after.j || before.k != after.k) {
      if (report.ok()) report.witness = edge;
      report.jkl_preserved = false;
    }
  }
  return report;
}

SquareReport check_lemma6(const ProductProcess& proc, const HomFamily& hf, std::size_t index,
                          const SearchBudget& budget) {
  require_empty_l(proc);
  if (index >= hf.source().size()) throw Error(ErrorKind::UnknownIndex, "index position out of range");
  const Graph pg = p_of_factor(proc, hf.source(), index, budget);
  const Graph ph = p_of_factor(proc, hf.target(), index, budget);
  const VertexMap& phi_i = hf.hom(index);
  SquareReport report;
  if (const auto bad = unpreserved_edge(pg, ph, phi_i.image)) {
    report.factor_homomorphism = false;
    report.witness = pg.label(bad->first) + pg.label(bad->second);
  }
  const auto vs = product_vertices(hf.source(), budget);
  const auto ws = product_vertices(hf.target(), budget);
  const auto image = product_image(hf, budget);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (ws[image[k]][index] != phi_i.image[vs[k][index]]) {
      report.square_commutes = false;
      if (report.witness.empty()) report.witness = product_label(vs[k], hf.source());
      break;
    }
  }
  return report;
}

Graph graph_of_hom(const VertexMap& m) {
  if (!is_homomorphism(m)) throw Error(ErrorKind::NotAHomomorphism, "graph_of_hom needs a homomorphism");
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < m.domain.order(); ++x) {
    labels.push_back("(" + m.domain.label(x) + "|" + m.codomain.label(m.image[x]) + ")");
  }
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < m.domain.order(); ++x) {
    for (std::size_t y = x + 1; y < m.domain.order(); ++y) {
      if (m.codomain.adjacent(m.image[x], m.image[y])) edges.emplace_back(x, y);
    }
  }
  return Graph::from_indices(std::move(labels), std::move(edges), false);
}

AlphaReport check_theorem7(const ProductProcess& proc, const HomFamily& hf, const SearchBudget& budget) {
  require_empty_l(proc);
  const Graph gamma = graph_of_hom(product_of_homs(proc, hf, budget));

  std::vector<Graph> factor_gammas;
  for (const auto& m : hf.homs()) factor_gammas.push_back(graph_of_hom(m));
  const GraphFamily gamma_family = hf.source().with_factors(std::move(factor_gammas));
  const Graph product = build_product(proc, gamma_family, budget);

  // Γ(φ_i) lists (x|φ_i x) in the order of V_i, so f* has the components of f.
  const auto vs = product_vertices(hf.source(), budget);
  std::vector<std::size_t> alpha;
  for (const auto& f : vs) alpha.push_back(product.index_of(product_label(f, gamma_family)));
  const VertexMap a = VertexMap::make(gamma, product, alpha);

  AlphaReport report;
  report.bijective = a.is_bijective();
  report.gamma_edges = gamma.edge_count();
  report.product_edges = product.edge_count();
  report.preserves_adjacency = is_homomorphism(a);
  report.reflects_adjacency = preserves_non_adjacency(a);
  for (std::size_t u = 0; u < gamma.order() && report.witness.empty(); ++u) {
    for (std::size_t v = u; v < gamma.order(); ++v) {
      if (gamma.adjacent(u, v) != product.adjacent(alpha[u], alpha[v])) {
        report.witness = gamma.label(u) + gamma.label(v);
        break;
      }
    }
  }
  return report;
}

}  // namespace gtensor
