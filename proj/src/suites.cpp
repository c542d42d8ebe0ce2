#include "gtensor/suites.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gtensor/congruence.hpp"
#include "gtensor/tensor.hpp"

namespace gtensor::suites {

namespace {

const std::vector<std::string> kLetters{"a", "b", "c", "d", "e"};

ProductProcess builtin(BuiltinProduct kind) { return ProductProcess::builtin(kind); }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string edge_list(const Graph& g) {
  std::vector<std::string> parts;
  for (const auto& [u, v] : g.edges()) parts.push_back(g.label(u) + g.label(v));
  return parts.empty() ? "-" : join(parts, ",");
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Every tuple over `names` of length n, first position most significant.
std::vector<std::vector<std::string>> tuples(const std::vector<std::string>& names, std::size_t n) {
  std::vector<std::vector<std::string>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<std::string>> next;
    for (const auto& t : out) {
      for (const auto& name : names) {
        next.push_back(t);
        next.back().push_back(name);
      }
    }
    out = std::move(next);
  }
  return out;
}

NamedFamily family_of(const std::vector<std::string>& factor_names, const std::vector<std::string>& order,
                      const std::vector<std::string>& d) {
  std::vector<Graph> factors;
  for (const auto& name : factor_names) factors.push_back(named_graph(name));
  const auto index = index_labels(factor_names.size());
  return NamedFamily{join(factor_names, ",") + "/order=" + join(order, ",") + "/D=" + join(d, ","),
                     GraphFamily::make(index, std::move(factors), order, d)};
}

std::string map_name(const VertexMap& m) {
  std::vector<std::string> parts;
  for (std::size_t v = 0; v < m.domain.order(); ++v) parts.push_back(m.domain.label(v) + ">" + m.codomain.label(m.image[v]));
  return join(parts, " ");
}

std::string perm_name(const std::vector<std::size_t>& p) {
  std::vector<std::string> parts;
  for (std::size_t i : p) parts.push_back(std::to_string(i + 1));
  return join(parts, ",");
}

void add(Report& r, std::string suite, std::string instance, bool ok, std::string detail) {
  r.lines.push_back(Line{std::move(suite), std::move(instance), ok ? "pass" : "fail", std::move(detail)});
}

std::string count(std::string_view key, std::size_t value) { return std::string(key) + "=" + std::to_string(value); }

// ---- identities ----------------------------------------------------------

Report identities(const SearchBudget& budget) {
  Report r;
  const Graph k2 = named_graph("K2");
  const auto fam = GraphFamily::make({"1", "2"}, {k2, k2}, std::vector<std::string>{"1", "2"});
  Graph c4 = Graph::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}, false);
  Graph two_k2 = Graph::make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}, false);
  Graph k4 = Graph::make({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}},
                         false);
  const std::vector<std::tuple<BuiltinProduct, std::string, Graph>> cases{
      {BuiltinProduct::Cartesian, "C4", c4},
      {BuiltinProduct::Direct, "2K2", two_k2},
      {BuiltinProduct::Strong, "K4", k4},
      {BuiltinProduct::Lexicographic, "K4", k4}};
  for (const auto& [kind, name, expected] : cases) {
    const Graph product = build_product(builtin(kind), fam, budget);
    add(r, "identities", std::string(to_string(kind)) + ":K2,K2~" + name, are_clones(product, expected, budget),
        "edges=" + edge_list(product));
  }
  return r;
}

// ---- constraints ---------------------------------------------------------

Report constraints(const SearchBudget& budget) {
  Report r;
  for (const auto& [name, fam] : product_catalogue()) {
    const auto vs = product_vertices(fam, budget);
    for (BuiltinProduct kind : kBuiltinProducts) {
      const auto dsl = ProductProcess::constraints(standard_constraints(kind));
      std::size_t pairs = 0, mismatches = 0;
      std::string first;
      for (std::size_t u = 0; u < vs.size(); ++u) {
        for (std::size_t v = u; v < vs.size(); ++v) {
          ++pairs;
          if (adjacent(dsl, vs[u], vs[v], fam, budget) != adjacent(builtin(kind), vs[u], vs[v], fam, budget)) {
            if (mismatches++ == 0) first = " first=" + product_label(vs[u], fam) + product_label(vs[v], fam);
          }
        }
      }
      add(r, "constraints", std::string(to_string(kind)) + ":" + name, mismatches == 0,
          count("pairs", pairs) + " " + count("mismatches", mismatches) + first);
    }
  }
  return r;
}

// ---- permutability -------------------------------------------------------

bool respects(BuiltinProduct kind, const GraphFamily& fam, const std::vector<std::size_t>& p) {
  if (kind == BuiltinProduct::Lexicographic) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != i) return false;
    }
  }
  if (kind == BuiltinProduct::DProduct) {
    const IndexSet d = *fam.distinguished();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (d.contains(i) != d.contains(p[i])) return false;
    }
  }
  return true;
}

Report permutability(const SearchBudget& budget) {
  Report r;
  for (const auto& [name, fam] : permutation_catalogue()) {
    for (BuiltinProduct kind : kBuiltinProducts) {
      std::vector<std::size_t> p(fam.size());
      std::iota(p.begin(), p.end(), 0);
      do {
        const auto report = check_permutability(builtin(kind), fam, p, budget);
        const auto expected =
            respects(kind, fam, p) ? PermutabilityOutcome::Confirmed : PermutabilityOutcome::StructureViolated;
        std::string detail = "outcome=" + std::string(to_string(report.outcome));
        if (!report.witness.empty()) detail += " witness=" + report.witness;
        add(r, "permutability", std::string(to_string(kind)) + ":" + name + ":p=" + perm_name(p),
            report.outcome == expected, detail);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
  return r;
}

// ---- universal -----------------------------------------------------------

Report universal(const SearchBudget& budget) {
  Report r;
  auto families = product_catalogue();
  for (auto& f : permutation_catalogue()) families.push_back(std::move(f));
  for (const auto& [name, fam] : families) {
    for (BuiltinProduct kind : kBuiltinProducts) {
      const auto report = check_universal_constraints(builtin(kind), fam, budget);
      std::string detail = count("edges", report.edges_checked);
      if (!report.ok()) detail += " first=" + report.violations.front();
      add(r, "universal", std::string(to_string(kind)) + ":" + name, report.ok(), detail);
    }
  }
  return r;
}

// ---- projections ---------------------------------------------------------

Report projections(const SearchBudget& budget) {
  Report r;
  for (const auto& [name, fam] : product_catalogue()) {
    for (BuiltinProduct kind : kBuiltinProducts) {
      bool ok = true;
      std::string detail;
      for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto hom = check_projection_hom(builtin(kind), fam, i, budget);
        if (!hom.ok && ok) detail = "index=" + fam.index_label(i) + " witness=" + hom.witness;
        ok = ok && hom.ok;
        if (kind == BuiltinProduct::Direct) {
          const auto theta = projection_congruence(builtin(kind), fam, i, budget);
          const bool trivial = theta.has_identity_partition() && theta.ehat == fam.factor(i).edges() &&
                               p_of_factor(builtin(kind), fam, i, budget) == fam.factor(i);
          if (!trivial && ok) detail = "index=" + fam.index_label(i) + " theta is not iota";
          ok = ok && trivial;
        }
      }
      add(r, "projections", std::string(to_string(kind)) + ":" + name, ok,
          detail.empty() ? count("indices", fam.size()) : detail);
    }
  }
  return r;
}

// ---- theorem2 ------------------------------------------------------------

Report theorem2(const SearchBudget& budget) {
  Report r;
  std::map<BuiltinProduct, std::size_t> strict;
  for (const auto& [name, fam] : product_catalogue()) {
    for (BuiltinProduct kind : kBuiltinProducts) {
      const auto report = check_theorem2(builtin(kind), fam, budget);
      if (!report.equal) ++strict[kind];
      const bool ok = report.included && (kind != BuiltinProduct::Direct || report.equal);
      std::string detail = count("product_edges", report.product_edges) + " " +
                           count("direct_edges", report.direct_edges) + " relation=" +
                           (!report.included ? "not-included" : report.equal ? "equal" : "strict");
      if (!report.witness.empty()) detail += " witness=" + report.witness;
      add(r, "theorem2", std::string(to_string(kind)) + ":" + name, ok, detail);
    }
  }
  // Every process other than direct must show a strict inclusion somewhere.
  for (BuiltinProduct kind : kBuiltinProducts) {
    if (kind == BuiltinProduct::Direct) continue;
    add(r, "theorem2", std::string(to_string(kind)) + ":strict-somewhere", strict[kind] > 0,
        count("strict_instances", strict[kind]));
  }
  return r;
}

// ---- tensor --------------------------------------------------------------

std::vector<std::vector<std::size_t>> surjections(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> image(n, 0);
  while (true) {
    std::vector<bool> hit(k, false);
    for (std::size_t v : image) hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) == hit.end()) out.push_back(image);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++image[i] < k) break;
      image[i] = 0;
      if (i == 0) return out;
    }
  }
}

Report tensor(const SearchBudget& budget) {
  Report r;
  const Graph k2 = named_graph("K2");
  const auto fam = GraphFamily::make({"1", "2"}, {k2, k2});
  std::vector<Graph> catalogue;
  for (auto& [name, g] : small_graph_catalogue(3)) catalogue.push_back(std::move(g));
  const Graph carrier = product_carrier(fam, budget);

  for (BuiltinProduct kind : {BuiltinProduct::Direct, BuiltinProduct::Cartesian}) {
    const auto proc = builtin(kind);
    const std::string prefix = std::string(to_string(kind)) + ":K2,K2";
    const auto canonical = verify_tensor_product(TensorCandidate::canonical(proc, fam, budget), proc, fam, catalogue,
                                                 budget);
    add(r, "tensor", prefix + ":canonical/targets=" + std::to_string(catalogue.size()), canonical.passed,
        to_string(canonical));

    // Every surjective P-morphism onto a graph with at most |V| vertices.
    const Graph product = build_product(proc, fam, budget);
    const std::vector<Graph> self{product};
    for (std::size_t k = 1; k <= carrier.order(); ++k) {
      std::size_t candidates = 0, passing = 0, certified = 0, clones = 0;
      for (const Graph& t : labelled_graphs(k)) {
        const bool clone = are_clones(t, product, budget);
        for (const auto& image : surjections(carrier.order(), k)) {
          const TensorCandidate cand{VertexMap::make(carrier, t, image)};
          if (!is_p_morphism(cand.phi, proc, fam, t, budget)) continue;
          ++candidates;
          if (clone) ++clones;
          if (!verify_tensor_product(cand, proc, fam, self, budget).passed) continue;
          ++passing;
          try {
            const VertexMap star = extract_isomorphism(cand, proc, fam, budget);
            if (clone && check_lemma4(VertexMap::make(product, t, image), star).ok()) ++certified;
          } catch (const Error&) {
          }
        }
      }
      add(r, "tensor", prefix + ":candidates/order=" + std::to_string(k), passing == certified,
          count("candidates", candidates) + " " + count("clone_candidates", clones) + " " + count("passing", passing) +
              " " + count("certified", certified));
    }

    // Constructed candidates whose target is not a clone of P(G).
    std::vector<std::pair<std::string, TensorCandidate>> bad;
    bad.emplace_back("constant-to-loop",
                     TensorCandidate{VertexMap::make(carrier, Graph::make({"a"}, {{"a", "a"}}, true),
                                                     std::vector<std::size_t>(carrier.order(), 0))});
    {
      auto labels = product.labels();
      labels.push_back("extra");
      const Graph bigger = Graph::from_indices(labels, product.edges(), false);
      std::vector<std::size_t> image(carrier.order());
      std::iota(image.begin(), image.end(), 0);
      bad.emplace_back("extra-vertex", TensorCandidate{VertexMap::make(carrier, bigger, image)});
    }
    {
      auto edges = product.edges();
      for (std::size_t v = 1; v < product.order(); ++v) {
        if (!product.adjacent(0, v)) {
          edges.push_back(make_edge(0, v));
          break;
        }
      }
      const Graph denser = Graph::from_indices(product.labels(), edges, false);
      std::vector<std::size_t> image(carrier.order());
      std::iota(image.begin(), image.end(), 0);
      bad.emplace_back("extra-edge", TensorCandidate{VertexMap::make(carrier, denser, image)});
    }
    {
      std::vector<LabelPair> merge;
      for (std::size_t v = 1; v < product.order(); ++v) {
        if (!product.adjacent(0, v)) {
          merge.emplace_back(product.label(0), product.label(v));
          break;
        }
      }
      const auto q = quotient(congruence_closure(product, merge, {}));
      bad.emplace_back("merged-vertices", TensorCandidate{VertexMap::make(carrier, q.graph, q.natural.image)});
    }
    for (const auto& [name, cand] : bad) {
      const auto report = verify_tensor_product(cand, proc, fam, self, budget);
      const bool explicit_witness = !report.passed && (report.condition != "ii" || report.witness_delta.has_value());
      add(r, "tensor", prefix + ":non-clone/" + name, explicit_witness && !are_clones(cand.target(), product, budget),
          to_string(report));
    }
  }
  return r;
}

// ---- hom-preserving and theorem7 -----------------------------------------

constexpr BuiltinProduct kEmptyL[] = {BuiltinProduct::Cartesian, BuiltinProduct::Direct, BuiltinProduct::Strong};

Report hom_preserving(const SearchBudget& budget) {
  Report r;
  const auto homs = hom_catalogue();
  for (BuiltinProduct kind : kBuiltinProducts) {
    const bool expected = std::find(std::begin(kEmptyL), std::end(kEmptyL), kind) != std::end(kEmptyL);
    for (std::size_t start = 0; start < homs.size();) {
      std::size_t end = start;
      std::size_t preserving = 0, failures = 0;
      std::string first;
      while (end < homs.size() && homs[end].group == homs[start].group) {
        const auto& [group, name, hf] = homs[end++];
        const auto report = check_hom_preserving(builtin(kind), hf, budget);
        bool ok = report.homomorphism;
        if (ok) ++preserving;
        if (expected) {
          ok = ok && report.jkl_preserved;
          for (std::size_t i = 0; i < 2; ++i) ok = ok && check_lemma6(builtin(kind), hf, i, budget).ok();
        }
        if (!ok && failures++ == 0) first = " first=[" + name + "] witness=" + report.witness;
      }
      const std::string instance = std::string(to_string(kind)) + ":" + homs[start].group;
      const std::string detail =
          count("families", end - start) + " " + count("homomorphic", preserving) + " " + count("failures", failures);
      if (expected) {
        add(r, "hom-preserving", instance, failures == 0, detail + first);
      } else {
        r.lines.push_back(Line{"hom-preserving", instance, "observed", detail});
      }
      start = end;
    }
  }
  return r;
}

Report theorem7(const SearchBudget& budget) {
  Report r;
  const auto homs = hom_catalogue();
  for (BuiltinProduct kind : kEmptyL) {
    for (std::size_t start = 0; start < homs.size();) {
      std::size_t end = start;
      std::size_t failures = 0;
      std::string first;
      while (end < homs.size() && homs[end].group == homs[start].group) {
        const auto& [group, name, hf] = homs[end++];
        const auto report = check_theorem7(builtin(kind), hf, budget);
        if (!report.ok() && failures++ == 0) {
          first = " first=[" + name + "] gamma_edges=" + std::to_string(report.gamma_edges) +
                  " product_edges=" + std::to_string(report.product_edges) + " witness=" + report.witness;
        }
      }
      add(r, "theorem7", std::string(to_string(kind)) + ":" + homs[start].group, failures == 0,
          count("families", end - start) + " " + count("failures", failures) + first);
      start = end;
    }
  }
  return r;
}

// ---- congruence ----------------------------------------------------------

Report congruence(const SearchBudget& budget) {
  Report r;
  for (const auto& [name, g] : small_graph_catalogue(3)) {
    const auto iota = Congruence::identity(g);
    const bool ok = is_congruence(iota) && are_clones(quotient(iota).graph, g, budget);
    add(r, "congruence", "iota:" + name, ok, "quotient=" + edge_list(quotient(iota).graph));
  }
  std::vector<Graph> graphs{named_graph("K2"), named_graph("P3"), named_graph("K3")};
  const std::vector<std::string> names{"K2", "P3", "K3"};
  for (std::size_t a = 0; a < graphs.size(); ++a) {
    for (std::size_t b = 0; b < graphs.size(); ++b) {
      for (const auto& m : enumerate_homomorphisms(graphs[a], graphs[b], budget)) {
        const auto c = kernel(m);
        add(r, "congruence", "kernel:" + names[a] + "->" + names[b] + ":[" + map_name(m) + "]", is_congruence(c),
            count("classes", c.classes.size()) + " " + count("ehat", c.ehat.size()));
      }
    }
  }
  const Graph k2 = named_graph("K2");
  add(r, "congruence", "reject:K2/one-class/no-loops", !is_congruence(Congruence{k2, {{0, 1}}, k2.edges()}),
      "expected=rejected");
  return r;
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name == "K1") return Graph::make({"a"}, {}, false);
  if (name == "K2") return Graph::make({"a", "b"}, {{"a", "b"}}, false);
  if (name == "P3") return Graph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, false);
  if (name == "K3") return Graph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, false);
  throw Error(ErrorKind::UnknownSymbol, "no graph named " + std::string(name));
}

std::vector<Graph> labelled_graphs(std::size_t order) {
  const std::vector<std::string> labels(kLetters.begin(), kLetters.begin() + static_cast<std::ptrdiff_t>(order));
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = u; v < order; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1U) edges.push_back(pairs[k]);
    }
    out.push_back(Graph::from_indices(labels, std::move(edges), true));
  }
  return out;
}

std::vector<NamedGraph> small_graph_catalogue(std::size_t max_order) {
  std::vector<NamedGraph> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const std::size_t first = out.size();
    for (auto& g : labelled_graphs(n)) {
      const bool seen = std::any_of(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                                    [&](const NamedGraph& h) { return are_clones(g, h.graph); });
      if (!seen) out.push_back(NamedGraph{"n" + std::to_string(n) + ":" + edge_list(g), std::move(g)});
    }
  }
  return out;
}

std::vector<NamedFamily> product_catalogue() {
  std::vector<NamedFamily> out;
  for (const auto& t : tuples({"K1", "K2", "P3", "K3"}, 2)) {
    out.push_back(family_of(t, {"1", "2"}, {"1"}));
    out.push_back(family_of(t, {"2", "1"}, {"2"}));
  }
  for (const auto& t : tuples({"K1", "K2"}, 3)) {
    out.push_back(family_of(t, {"1", "2", "3"}, {"1"}));
    out.push_back(family_of(t, {"3", "2", "1"}, {"2", "3"}));
  }
  return out;
}

std::vector<NamedFamily> permutation_catalogue() {
  std::vector<NamedFamily> out;
  for (const auto& t : tuples({"K2", "P3"}, 2)) out.push_back(family_of(t, {"1", "2"}, {"1"}));
  for (const auto& t : tuples({"K2", "P3"}, 3)) out.push_back(family_of(t, {"1", "2", "3"}, {"1", "3"}));
  return out;
}

std::vector<NamedHomFamily> hom_catalogue() {
  const std::vector<std::string> names{"K2", "P3", "K3"};
  struct Entry {
    std::string from, to;
    VertexMap map;
  };
  std::vector<Entry> homs;
  for (const auto& g : names) {
    for (const auto& h : names) {
      for (auto& m : enumerate_homomorphisms(named_graph(g), named_graph(h))) homs.push_back({g, h, std::move(m)});
    }
  }
  std::vector<NamedHomFamily> out;
  const std::vector<std::string> index{"1", "2"}, order{"1", "2"}, d{"1"};
  for (const auto& a : homs) {
    for (const auto& b : homs) {
      auto source = GraphFamily::make(index, {a.map.domain, b.map.domain}, order, d);
      auto target = GraphFamily::make(index, {a.map.codomain, b.map.codomain}, order, d);
      out.push_back(NamedHomFamily{a.from + "," + b.from + "->" + a.to + "," + b.to,
                                   map_name(a.map) + "; " + map_name(b.map),
                                   HomFamily::make(std::move(source), std::move(target), {a.map, b.map})});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.group < y.group; });
  return out;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [](const Line& l) { return l.status == "fail"; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "constraints",    "permutability", "universal",
                                              "projections", "theorem2",      "tensor",        "hom-preserving",
                                              "theorem7",    "congruence"};
  return names;
}

Report run(std::string_view name, const SearchBudget& budget) {
  if (name == "all") {
    Report all;
    for (const auto& suite : suite_names()) all.append(run(suite, budget));
    return all;
  }
  if (name == "identities") return identities(budget);
  if (name == "constraints") return constraints(budget);
  if (name == "permutability") return permutability(budget);
  if (name == "universal") return universal(budget);
  if (name == "projections") return projections(budget);
  if (name == "theorem2") return theorem2(budget);
  if (name == "tensor") return tensor(budget);
  if (name == "hom-preserving") return hom_preserving(budget);
  if (name == "theorem7") return theorem7(budget);
  if (name == "congruence") return congruence(budget);
  throw Error(ErrorKind::PreconditionViolated, "unknown suite " + std::string(name));
}

std::string format(const Report& report) {
  std::string out;
  for (const auto& l : report.lines) out += l.suite + " " + l.instance + " " + l.status + " " + l.detail + "\n";
  return out;
}

}  // namespace gtensor::suites
