#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "gtensor/product.hpp"

using namespace gtensor;
using namespace gtensor::testing;

namespace {

GraphFamily pair_family(Graph a, Graph b) { return GraphFamily::make({"1", "2"}, {std::move(a), std::move(b)}); }

ProductVertex pv(const GraphFamily& fam, std::initializer_list<const char*> labels) {
  ProductVertex f;
  std::size_t i = 0;
  for (const char* label : labels) f.components.push_back(fam.factor(i++).index_of(label));
  return f;
}

ProductProcess builtin(BuiltinProduct kind) { return ProductProcess::builtin(kind); }

// Oracle: the product edge set straight from the textbook definitions of the
// three fundamental products on two simple factors.
Graph two_factor_oracle(BuiltinProduct kind, const Graph& g, const Graph& h) {
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < h.order(); ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  }
  std::vector<Edge> edges;
  const std::size_t n = g.order() * h.order();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t a1 = u / h.order(), b1 = u % h.order(), a2 = v / h.order(), b2 = v % h.order();
      const bool ga = g.adjacent(a1, a2), hb = h.adjacent(b1, b2);
      bool edge = false;
      switch (kind) {
        case BuiltinProduct::Cartesian: edge = (ga && b1 == b2) || (a1 == a2 && hb); break;
        case BuiltinProduct::Direct: edge = ga && hb; break;
        case BuiltinProduct::Strong: edge = (ga && b1 == b2) || (a1 == a2 && hb) || (ga && hb); break;
        case BuiltinProduct::Lexicographic: edge = ga || (a1 == a2 && hb); break;
        case BuiltinProduct::DProduct: edge = ga; break;  // D = {1}
      }
      if (edge) edges.emplace_back(u, v);
    }
  }
  return Graph::from_indices(labels, edges, false);
}

}  // namespace

TEST_CASE("product_vertices enumerates tuples lexicographically") {
  const auto fam = pair_family(k2(), k2());
  const auto vs = product_vertices(fam);
  REQUIRE(vs.size() == 4);
  std::vector<std::string> labels;
  for (const auto& f : vs) labels.push_back(product_label(f, fam));
  CHECK(labels == std::vector<std::string>{"(a,a)", "(a,b)", "(b,a)", "(b,b)"});
  CHECK(product_vertices(GraphFamily::make({"1"}, {k1()})).size() == 1);
  CHECK(product_vertices(pair_family(k2(), p3())).size() == 6);
  for (std::size_t r = 0; r < vs.size(); ++r) CHECK(product_rank(vs[r], fam) == r);
}

TEST_CASE("product_vertices respects the budget") {
  const auto fam = GraphFamily::make({"1", "2", "3"}, {complete(10), complete(10), complete(10)});
  CHECK_THROWS_AS(product_vertices(fam, SearchBudget{999}), Error);
}

TEST_CASE("jkl triples") {
  const auto fam = pair_family(k2(), k2());
  const auto t1 = jkl(pv(fam, {"a", "a"}), pv(fam, {"a", "b"}), fam);
  CHECK(t1.j == IndexSet::single(1));
  CHECK(t1.k == IndexSet::single(0));
  CHECK(t1.l.empty());

  const auto t2 = jkl(pv(fam, {"a", "a"}), pv(fam, {"b", "b"}), fam);
  CHECK(t2.j == fam.all());
  CHECK(t2.k.empty());
  CHECK(t2.l.empty());

  const auto fam2 = pair_family(k2(), p3());
  const auto t3 = jkl(pv(fam2, {"a", "a"}), pv(fam2, {"b", "c"}), fam2);
  CHECK(t3.j == IndexSet::single(0));
  CHECK(t3.k.empty());
  CHECK(t3.l == IndexSet::single(1));

  CHECK_THROWS_AS(jkl(pv(fam, {"a", "a"}), pv(fam, {"a", "a"}), fam), Error);
}

TEST_CASE("jkl partitions I for simple factors, overlaps on loops") {
  const auto fam = pair_family(p3(), k3());
  const auto vs = product_vertices(fam);
  for (std::size_t u = 0; u < vs.size(); ++u) {
    for (std::size_t v = u + 1; v < vs.size(); ++v) {
      const auto t = jkl(vs[u], vs[v], fam);
      CHECK((t.j & t.k).empty());
      CHECK((t.j | t.k | t.l) == fam.all());
      CHECK(t.j.size() + t.k.size() + t.l.size() == fam.size());
    }
  }
  const auto loopy = pair_family(loopy_k2(), k2());
  const auto t = jkl(pv(loopy, {"a", "a"}), pv(loopy, {"a", "b"}), loopy);
  CHECK(t.j == fam.all());
  CHECK(t.k == IndexSet::single(0));
}

TEST_CASE("adjacent examples") {
  const auto fam = pair_family(k2(), k2());
  CHECK(adjacent(builtin(BuiltinProduct::Direct), pv(fam, {"a", "a"}), pv(fam, {"b", "b"}), fam));
  CHECK_FALSE(adjacent(builtin(BuiltinProduct::Cartesian), pv(fam, {"a", "a"}), pv(fam, {"b", "b"}), fam));
  const auto with_d = fam.with_distinguished({"1"});
  CHECK(adjacent(builtin(BuiltinProduct::DProduct), pv(with_d, {"a", "a"}), pv(with_d, {"b", "a"}), with_d));
}

TEST_CASE("missing structure is reported") {
  const auto fam = pair_family(k2(), k2());
  try {
    build_product(builtin(BuiltinProduct::Lexicographic), fam);
    FAIL("expected MissingStructure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingStructure);
  }
  CHECK_THROWS_AS(build_product(builtin(BuiltinProduct::DProduct), fam), Error);
}

TEST_CASE("fundamental products of K2 with K2") {
  const auto fam = pair_family(k2(), k2()).with_order({"1", "2"});
  const Graph cart = build_product(builtin(BuiltinProduct::Cartesian), fam);
  const Graph direct = build_product(builtin(BuiltinProduct::Direct), fam);
  const Graph strong = build_product(builtin(BuiltinProduct::Strong), fam);
  const Graph lex = build_product(builtin(BuiltinProduct::Lexicographic), fam);

  CHECK(are_clones(cart, cycle(4)));
  CHECK(are_clones(direct, disjoint_union(std::vector<Graph>{k2(), k2()})));
  CHECK(direct.adjacent(0, 3));  // (a,a)(b,b)
  CHECK(direct.adjacent(1, 2));  // (a,b)(b,a)
  CHECK(are_clones(strong, complete(4)));
  CHECK(are_clones(lex, complete(4)));
}

TEST_CASE("single-factor direct product is a clone of the factor") {
  for (const Graph& g : {k1(), k2(), p3(), k3(), cycle(5)}) {
    const auto fam = GraphFamily::make({"1"}, {g});
    CHECK(are_clones(build_product(builtin(BuiltinProduct::Direct), fam), g));
  }
}

TEST_CASE("built-ins agree with the two-factor textbook definitions") {
  const std::vector<Graph> graphs{k1(), k2(), p3(), k3(), cycle(4)};
  for (const auto& g : graphs) {
    for (const auto& h : graphs) {
      const auto fam = pair_family(g, h).with_order({"1", "2"}).with_distinguished({"1"});
      for (BuiltinProduct kind : kBuiltinProducts) {
        CHECK(build_product(builtin(kind), fam) == two_factor_oracle(kind, g, h));
      }
    }
  }
}

TEST_CASE("strong = cartesian u direct, and D = I gives the direct product") {
  const std::vector<Graph> graphs{k1(), k2(), p3(), k3()};
  for (const auto& g : graphs) {
    for (const auto& h : graphs) {
      const auto fam = pair_family(g, h).with_distinguished({"1", "2"});
      const Graph cart = build_product(builtin(BuiltinProduct::Cartesian), fam);
      const Graph direct = build_product(builtin(BuiltinProduct::Direct), fam);
      const Graph strong = build_product(builtin(BuiltinProduct::Strong), fam);
      std::vector<Edge> both = cart.edges();
      both.insert(both.end(), direct.edges().begin(), direct.edges().end());
      std::sort(both.begin(), both.end());
      CHECK(strong.edges() == both);
      CHECK(build_product(builtin(BuiltinProduct::DProduct), fam) == direct);
    }
  }
}

TEST_CASE("adjacency is symmetric") {
  const auto fam = GraphFamily::make({"1", "2", "3"}, {k2(), p3(), k2()}, std::vector<std::string>{"2", "1", "3"},
                                     std::vector<std::string>{"1", "3"});
  const auto vs = product_vertices(fam);
  for (BuiltinProduct kind : kBuiltinProducts) {
    for (const auto& f : vs) {
      for (const auto& g : vs) CHECK(adjacent(builtin(kind), f, g, fam) == adjacent(builtin(kind), g, f, fam));
    }
  }
}

TEST_CASE("direct product of loop-allowing factors carries loops") {
  const auto fam = pair_family(loopy_k2(), loopy_k1());
  const Graph g = build_product(builtin(BuiltinProduct::Direct), fam);
  CHECK(g.loops_allowed());
  CHECK(g.loop_count() == 2);
  CHECK(build_product(builtin(BuiltinProduct::Cartesian), fam).loop_count() == 0);
}

TEST_CASE("universal constraints hold for the built-ins") {
  CHECK(check_universal_constraints(builtin(BuiltinProduct::Direct), pair_family(k2(), k2())).ok());
  const auto cart = check_universal_constraints(builtin(BuiltinProduct::Cartesian), pair_family(k2(), p3()));
  CHECK(cart.ok());
  CHECK(cart.edges_checked == 7);
  CHECK(check_universal_constraints(builtin(BuiltinProduct::DProduct),
                                    pair_family(k2(), k2()).with_distinguished({"1"}))
            .ok());
}

TEST_CASE("universal constraints flag loop overlaps") {
  const auto report = check_universal_constraints(builtin(BuiltinProduct::Direct), pair_family(loopy_k2(), k2()));
  CHECK_FALSE(report.ok());
}

TEST_CASE("permutability") {
  const auto fam = pair_family(k2(), p3());
  const std::vector<std::size_t> swap{1, 0};
  CHECK(check_permutability(builtin(BuiltinProduct::Direct), fam, swap).outcome ==
        PermutabilityOutcome::Confirmed);

  const auto ordered = pair_family(k2(), k2()).with_order({"1", "2"});
  CHECK(check_permutability(builtin(BuiltinProduct::Lexicographic), ordered, swap).outcome ==
        PermutabilityOutcome::StructureViolated);
  CHECK(check_permutability(builtin(BuiltinProduct::Lexicographic), ordered, {0, 1}).outcome ==
        PermutabilityOutcome::Confirmed);

  const auto with_d = pair_family(k2(), k2()).with_distinguished({"1"});
  CHECK(check_permutability(builtin(BuiltinProduct::DProduct), with_d, swap).outcome ==
        PermutabilityOutcome::StructureViolated);

  CHECK_THROWS_AS(check_permutability(builtin(BuiltinProduct::Direct), fam, {0, 0}), Error);
}

TEST_CASE("lexicographic product is not commutative, so a non-identity swap could not be confirmed") {
  // K2 o 2K1 versus 2K1 o K2: different edge counts.
  const auto fam = pair_family(k2(), two_k1()).with_order({"1", "2"});
  const auto swapped = pair_family(two_k1(), k2()).with_order({"1", "2"});
  const auto lex = builtin(BuiltinProduct::Lexicographic);
  CHECK(build_product(lex, fam).edge_count() != build_product(lex, swapped).edge_count());
}

TEST_CASE("permutations of three-factor families are isomorphisms") {
  const auto fam = GraphFamily::make({"1", "2", "3"}, {k2(), p3(), k3()}, std::nullopt,
                                     std::vector<std::string>{"1", "3"});
  std::vector<std::size_t> p{0, 1, 2};
  do {
    for (BuiltinProduct kind : {BuiltinProduct::Cartesian, BuiltinProduct::Direct, BuiltinProduct::Strong}) {
      CHECK(check_permutability(builtin(kind), fam, p).outcome == PermutabilityOutcome::Confirmed);
    }
    const bool keeps_d = (p[0] == 0 || p[0] == 2) && (p[2] == 0 || p[2] == 2);
    CHECK(check_permutability(builtin(BuiltinProduct::DProduct), fam, p).outcome ==
          (keeps_d ? PermutabilityOutcome::Confirmed : PermutabilityOutcome::StructureViolated));
  } while (std::next_permutation(p.begin(), p.end()));
}
