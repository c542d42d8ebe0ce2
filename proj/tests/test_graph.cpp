#include <doctest.h>

#include "fixtures.hpp"
#include "gtensor/graph.hpp"

using namespace gtensor;
using namespace gtensor::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::PreconditionViolated;
}

}  // namespace

TEST_CASE("make_graph builds canonical graphs") {
  const Graph g = Graph::make({"a", "b"}, {{"b", "a"}, {"a", "b"}}, false);
  CHECK(g.order() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(g == k2());

  const Graph loopy = loopy_k1();
  CHECK(loopy.order() == 1);
  CHECK(loopy.has_loop(0));
}

TEST_CASE("make_graph rejects malformed input") {
  CHECK(kind_of([] { Graph::make({"a", "b"}, {{"a", "c"}}, false); }) == ErrorKind::DanglingEndpoint);
  CHECK(kind_of([] { Graph::make({}, {}, false); }) == ErrorKind::EmptyVertexSet);
  CHECK(kind_of([] { Graph::make({"a"}, {{"a", "a"}}, false); }) == ErrorKind::LoopForbidden);
}

TEST_CASE("equality is label sensitive and order insensitive") {
  const Graph a = Graph::make({"a", "b", "c"}, {{"a", "b"}}, false);
  const Graph b = Graph::make({"c", "b", "a"}, {{"b", "a"}}, false);
  const Graph c = Graph::make({"x", "y", "z"}, {{"x", "y"}}, false);
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("is_homomorphism") {
  CHECK(is_homomorphism(VertexMap::identity(k2())));
  CHECK_FALSE(is_homomorphism(VertexMap::make(k2(), k2(), {0, 0})));
  const auto fold = VertexMap::from_labels(p3(), k2_xy(), {{"a", "x"}, {"b", "y"}, {"c", "x"}});
  CHECK(is_homomorphism(fold));
  // A coinciding image is an edge only if the codomain has that loop.
  CHECK(is_homomorphism(VertexMap::make(k2(), loopy_k1(), {0, 0})));
  CHECK_FALSE(is_homomorphism(VertexMap::make(k2(), k1(), {0, 0})));
}

TEST_CASE("enumerate_homomorphisms small cases") {
  CHECK(enumerate_homomorphisms(k2(), k2()).size() == 2);
  CHECK(enumerate_homomorphisms(k2(), k1()).empty());
  CHECK(enumerate_homomorphisms(k1(), k2()).size() == 2);

  const auto homs = enumerate_homomorphisms(k2(), k2());
  CHECK(homs[0].image == std::vector<std::size_t>{0, 1});
  CHECK(homs[1].image == std::vector<std::size_t>{1, 0});
}

TEST_CASE("enumerate_homomorphisms matches brute force on all graphs up to 3 vertices") {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& g : all_labelled_graphs(n, true)) graphs.push_back(std::move(g));
  }
  for (const Graph& g : graphs) {
    for (const Graph& h : graphs) {
      const auto expected = brute_force_homomorphisms(g, h);
      const auto actual = enumerate_homomorphisms(g, h);
      REQUIRE(actual.size() == expected.size());
      for (std::size_t i = 0; i < actual.size(); ++i) CHECK(actual[i].image == expected[i]);
    }
  }
}

TEST_CASE("homomorphisms compose") {
  const std::vector<Graph> graphs{k1(), loopy_k1(), k2(), p3(), k3(), loopy_k2()};
  for (const auto& g : graphs) {
    for (const auto& h : graphs) {
      for (const auto& k : graphs) {
        for (const auto& m : enumerate_homomorphisms(g, h)) {
          for (const auto& n : enumerate_homomorphisms(h, k)) CHECK(is_homomorphism(compose(m, n)));
        }
      }
    }
  }
}

TEST_CASE("enumerate_homomorphisms respects the budget") {
  CHECK(kind_of([] { enumerate_homomorphisms(complete(8), complete(8), SearchBudget{1000}); }) ==
        ErrorKind::SearchBudgetExceeded);
}

TEST_CASE("find_isomorphism") {
  const Graph c4 = cycle(4);
  const Graph c4b = Graph::make({"p", "q", "r", "s"}, {{"p", "r"}, {"r", "q"}, {"q", "s"}, {"s", "p"}}, false);
  const auto iso = find_isomorphism(c4, c4b);
  REQUIRE(iso.has_value());
  CHECK(iso->is_bijective());
  CHECK(is_homomorphism(*iso));
  CHECK(preserves_non_adjacency(*iso));

  CHECK_FALSE(find_isomorphism(k2(), two_k1()).has_value());

  const Graph k3a = Graph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, false);
  const Graph two_k3 = disjoint_union(std::vector<Graph>{k3a, k3a});
  CHECK_FALSE(find_isomorphism(cycle(6), two_k3).has_value());
  CHECK_FALSE(brute_force_isomorphic(cycle(6), two_k3));

  // Loop status matters.
  CHECK_FALSE(find_isomorphism(k1(), loopy_k1()).has_value());
}

TEST_CASE("find_isomorphism agrees with brute force on 3- and 4-vertex graphs") {
  for (std::size_t n : {3U, 4U}) {
    const auto graphs = all_labelled_graphs(n, n == 3);
    for (std::size_t a = 0; a < graphs.size(); a += 3) {
      for (std::size_t b = 0; b < graphs.size(); b += 5) {
        const auto iso = find_isomorphism(graphs[a], graphs[b]);
        CHECK(iso.has_value() == brute_force_isomorphic(graphs[a], graphs[b]));
        if (iso) {
          CHECK(is_homomorphism(*iso));
          CHECK(preserves_non_adjacency(*iso));
          CHECK(iso->is_bijective());
        }
      }
    }
  }
}

TEST_CASE("disjoint_union") {
  const Graph one = disjoint_union(std::vector<Graph>{k2()});
  CHECK(one.order() == 2);
  CHECK(one.edge_count() == 1);
  CHECK(one.labels() == std::vector<std::string>{"0:a", "0:b"});

  CHECK(are_clones(disjoint_union(std::vector<Graph>{k1(), k1()}), two_k1()));
  const Graph two = disjoint_union(std::vector<Graph>{k2(), k2()});
  CHECK(two.order() == 4);
  CHECK(two.edge_count() == 2);
}

TEST_CASE("induced_subgraph") {
  const std::vector<std::string> ab{"a", "b"};
  const std::vector<std::string> ac{"a", "c"};
  const std::vector<std::string> abc{"a", "b", "c"};
  CHECK(induced_subgraph(p3(), ab) == k2());
  CHECK(induced_subgraph(p3(), ac) == Graph::make({"a", "c"}, {}, false));
  CHECK(induced_subgraph(p3(), abc) == p3());
  CHECK(kind_of([] { induced_subgraph(p3(), std::vector<std::string>{}); }) == ErrorKind::EmptySelection);
  CHECK(kind_of([] { induced_subgraph(p3(), std::vector<std::string>{"z"}); }) == ErrorKind::UnknownVertex);
}
