#include "gtensor/tensor.hpp"

namespace gtensor {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::string format_map(const VertexMap& m) {
  std::string out;
  for (std::size_t v = 0; v < m.domain.order(); ++v) {
    if (v > 0) out += ',';
    out += m.domain.label(v) + "->" + m.codomain.label(m.image[v]);
  }
  return out;
}

bool same_vertices(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  for (const auto& label : a.labels()) {
    if (!b.find(label)) return false;
  }
  return true;
}

// δ* forced by δ = δ* ∘ φ on a surjective φ; nullopt when φ identifies
// vertices that δ separates.
std::optional<std::vector<std::size_t>> forced_factor(std::span<const std::size_t> phi, std::size_t target_order,
                                                      std::span<const std::size_t> delta) {
  std::vector<std::size_t> star(target_order, kUnset);
  for (std::size_t f = 0; f < phi.size(); ++f) {
    std::size_t& slot = star[phi[f]];
    if (slot == kUnset) {
      slot = delta[f];
    } else if (slot != delta[f]) {
      return std::nullopt;
    }
  }
  return star;
}

}  // namespace

Graph product_carrier(const GraphFamily& fam, const SearchBudget& budget) {
  std::vector<std::string> labels;
  for (const auto& f : product_vertices(fam, budget)) labels.push_back(product_label(f, fam));
  return discrete_graph(std::move(labels));
}

bool is_p_morphism(const VertexMap& d, const ProductProcess& proc, const GraphFamily& fam, const Graph& h,
                   const SearchBudget& budget) {
  const Graph product = build_product(proc, fam, budget);
  if (d.domain.labels() != product.labels()) {
    throw Error(ErrorKind::DomainMismatch, "map domain is not the product vertex set");
  }
  if (!same_vertices(d.codomain, h)) throw Error(ErrorKind::DomainMismatch, "map codomain is not the target");
  std::vector<std::size_t> image;
  for (std::size_t v : d.image) image.push_back(h.index_of(d.codomain.label(v)));
  return is_homomorphism(product, h, image);
}

TensorCandidate TensorCandidate::canonical(const ProductProcess& proc, const GraphFamily& fam,
                                           const SearchBudget& budget) {
  const Graph product = build_product(proc, fam, budget);
  std::vector<std::size_t> image(product.order());
  for (std::size_t v = 0; v < image.size(); ++v) image[v] = v;
  return TensorCandidate{VertexMap::make(product_carrier(fam, budget), product, std::move(image))};
}

std::string to_string(const TensorReport& r) {
  std::string out = "condition=" + r.condition + " status=" + (r.passed ? "pass" : "fail");
  out += " witness_target=" + (r.witness_target ? std::to_string(*r.witness_target) : std::string("-"));
  out += " witness_delta=" + (r.witness_delta ? format_map(*r.witness_delta) : std::string("-"));
  out += " factor_found=" + std::to_string(r.factor_found);
  if (!r.reason.empty()) out += " reason=\"" + r.reason + "\"";
  return out;
}

TensorReport verify_tensor_product(const TensorCandidate& cand, const ProductProcess& proc, const GraphFamily& fam,
                                   std::span<const Graph> targets, const SearchBudget& budget) {
  TensorReport report;
  const Graph& t = cand.target();
  if (!is_p_morphism(cand.phi, proc, fam, t, budget)) {
    report.condition = "pre";
    report.passed = false;
    report.reason = "phi is not a P-morphism";
    return report;
  }
  if (!cand.phi.is_surjective()) {
    report.condition = "i";
    report.passed = false;
    report.reason = "phi is not surjective";
    return report;
  }

  const Graph product = build_product(proc, fam, budget);
  for (std::size_t k = 0; k < targets.size() && report.passed; ++k) {
    const Graph& h = targets[k];
    for_each_homomorphism(product, h, budget, [&](std::span<const std::size_t> delta) {
      const auto star = forced_factor(cand.phi.image, t.order(), delta);
      if (star && is_homomorphism(t, h, *star)) {
        ++report.factor_found;
        return true;
      }
      report.passed = false;
      report.reason = star ? "forced factor is not a homomorphism" : "phi identifies vertices that delta separates";
      report.witness_target = k;
      report.witness_delta = VertexMap::make(product, h, {delta.begin(), delta.end()});
      return false;
    });
  }
  return report;
}

VertexMap extract_isomorphism(const TensorCandidate& cand, const ProductProcess& proc, const GraphFamily& fam,
                              const SearchBudget& budget) {
  const Graph product = build_product(proc, fam, budget);
  const Graph targets[] = {product};
  if (!verify_tensor_product(cand, proc, fam, targets, budget).passed) {
    throw Error(ErrorKind::PreconditionViolated, "candidate is not a tensor product against P(G)");
  }
  const Graph& t = cand.target();
  std::vector<std::size_t> identity(product.order());
  for (std::size_t v = 0; v < identity.size(); ++v) identity[v] = v;
  const auto star = forced_factor(cand.phi.image, t.order(), identity);
  if (!star || !is_homomorphism(t, product, *star)) {
    throw Error(ErrorKind::NoFactorization, "identity on V does not factor through phi");
  }
  for (std::size_t x = 0; x < t.order(); ++x) {
    if (cand.phi.image[(*star)[x]] != x) throw Error(ErrorKind::NoFactorization, "phi after id* is not the identity");
  }
  return VertexMap::make(t, product, *star);
}

CloneReport check_lemma4(const VertexMap& m1, const VertexMap& m2) {
  if (!is_homomorphism(m1) || !is_homomorphism(m2)) {
    throw Error(ErrorKind::PreconditionViolated, "both maps must be homomorphisms");
  }
  auto is_identity = [](const VertexMap& m) {
    for (std::size_t v = 0; v < m.domain.order(); ++v) {
      if (m.codomain.label(m.image[v]) != m.domain.label(v)) return false;
    }
    return true;
  };
  try {
    if (!is_identity(compose(m1, m2)) || !is_identity(compose(m2, m1))) {
      throw Error(ErrorKind::PreconditionViolated, "maps are not mutually inverse");
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DomainMismatch) throw;
    throw Error(ErrorKind::PreconditionViolated, "maps do not compose");
  }
  return CloneReport{m1.is_bijective(), m2.is_bijective(), preserves_non_adjacency(m1), preserves_non_adjacency(m2)};
}

}  // namespace gtensor
