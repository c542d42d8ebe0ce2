#include <doctest.h>

#include "fixtures.hpp"
#include "gtensor/tensor.hpp"

using namespace gtensor;
using namespace gtensor::testing;

namespace {

ProductProcess builtin(BuiltinProduct kind) { return ProductProcess::builtin(kind); }
GraphFamily k2k2() { return GraphFamily::make({"1", "2"}, {k2(), k2()}); }

std::vector<Graph> graphs_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& g : all_labelled_graphs(k, true)) out.push_back(std::move(g));
  }
  return out;
}

VertexMap first_projection(const GraphFamily& fam) {
  const Graph carrier = product_carrier(fam);
  std::vector<std::size_t> image;
  for (const auto& f : product_vertices(fam)) image.push_back(f.components[0]);
  return VertexMap::make(carrier, fam.factor(0), image);
}

// Every surjection {0..n-1} -> {0..k-1}, in lexicographic order.
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

}  // namespace

TEST_CASE("is_p_morphism examples") {
  const auto fam = k2k2();
  const auto direct = builtin(BuiltinProduct::Direct);
  const auto id = TensorCandidate::canonical(direct, fam);
  CHECK(is_p_morphism(id.phi, direct, fam, id.target()));
  CHECK(is_p_morphism(first_projection(fam), direct, fam, k2()));
  CHECK_FALSE(is_p_morphism(first_projection(fam), builtin(BuiltinProduct::Cartesian), fam, k2()));
  CHECK_THROWS_AS(is_p_morphism(VertexMap::identity(k2()), direct, fam, k2()), Error);
}

TEST_CASE("the canonical candidate passes") {
  const auto fam = k2k2();
  const auto targets = graphs_up_to(2);
  for (BuiltinProduct kind : {BuiltinProduct::Direct, BuiltinProduct::Cartesian, BuiltinProduct::Strong}) {
    const auto r = verify_tensor_product(TensorCandidate::canonical(builtin(kind), fam), builtin(kind), fam, targets);
    CHECK_MESSAGE(r.passed, to_string(r));
    CHECK(r.factor_found > 0);
  }
}

TEST_CASE("a non-surjective candidate fails condition i") {
  const auto fam = k2k2();
  const auto direct = builtin(BuiltinProduct::Direct);
  const Graph product = build_product(direct, fam);
  std::vector<std::string> labels = product.labels();
  labels.push_back("extra");
  const Graph bigger = Graph::from_indices(labels, product.edges(), false);
  const TensorCandidate cand{VertexMap::make(product_carrier(fam), bigger, {0, 1, 2, 3})};
  const auto targets = graphs_up_to(1);
  const auto r = verify_tensor_product(cand, direct, fam, targets);
  CHECK_FALSE(r.passed);
  CHECK(r.condition == "i");
}

TEST_CASE("collapsing to a loop fails condition ii") {
  const auto fam = k2k2();
  const auto direct = builtin(BuiltinProduct::Direct);
  const TensorCandidate cand{VertexMap::make(product_carrier(fam), loopy_k1(), {0, 0, 0, 0})};
  const std::vector<Graph> targets{build_product(direct, fam)};
  const auto r = verify_tensor_product(cand, direct, fam, targets);
  CHECK_FALSE(r.passed);
  CHECK(r.condition == "ii");
  REQUIRE(r.witness_target.has_value());
  CHECK(*r.witness_target == 0);
  REQUIRE(r.witness_delta.has_value());
  // First homomorphism in lexicographic order: (a,a),(a,b) -> (a,a) and (b,a),(b,b) -> (b,b).
  CHECK(r.witness_delta->image == std::vector<std::size_t>{0, 0, 3, 3});
  CHECK(to_string(r).starts_with("condition=ii status=fail witness_target=0"));
}

TEST_CASE("extract_isomorphism") {
  const auto fam = k2k2();
  const auto cart = builtin(BuiltinProduct::Cartesian);
  const auto id = TensorCandidate::canonical(cart, fam);
  CHECK(extract_isomorphism(id, cart, fam).image == std::vector<std::size_t>{0, 1, 2, 3});

  // Relabel C4 onto p..s with r = (0 1 3 2), so r⁻¹ = (0 1 3 2) as well.
  const Graph c4 = Graph::make({"p", "q", "r", "s"}, {{"p", "q"}, {"q", "s"}, {"s", "r"}, {"r", "p"}}, false);
  const TensorCandidate relabel{VertexMap::make(product_carrier(fam), c4, {0, 1, 2, 3})};
  const auto inverse = extract_isomorphism(relabel, cart, fam);
  CHECK(inverse.image == std::vector<std::size_t>{0, 1, 2, 3});

  const TensorCandidate shuffled{VertexMap::make(product_carrier(fam), c4, {1, 3, 0, 2})};
  const auto back = extract_isomorphism(shuffled, cart, fam);
  for (std::size_t f = 0; f < 4; ++f) CHECK(back.image[shuffled.phi.image[f]] == f);

  const TensorCandidate bad{VertexMap::make(product_carrier(fam), loopy_k1(), {0, 0, 0, 0})};
  CHECK_THROWS_AS(extract_isomorphism(bad, cart, fam), Error);
}

TEST_CASE("check_lemma4") {
  const auto id = VertexMap::identity(k2());
  CHECK(check_lemma4(id, id).ok());
  const auto swap = VertexMap::make(k2(), k2(), {1, 0});
  CHECK(check_lemma4(swap, swap).ok());
  CHECK_THROWS_AS(check_lemma4(swap, id), Error);
  CHECK_THROWS_AS(check_lemma4(VertexMap::make(k2(), loopy_k1(), {0, 0}), VertexMap::make(loopy_k1(), k2(), {0})),
                  Error);
}

TEST_CASE("passing candidates are exactly the clones of P(G)") {
  const auto fam = k2k2();
  const Graph carrier = product_carrier(fam);
  const auto all_targets = graphs_up_to(4);
  for (BuiltinProduct kind : {BuiltinProduct::Direct, BuiltinProduct::Cartesian}) {
    const auto proc = builtin(kind);
    const Graph product = build_product(proc, fam);
    const std::vector<Graph> targets{product};
    std::size_t passed = 0;
    for (const Graph& t : all_targets) {
      const bool clone = are_clones(t, product);
      for (const auto& image : surjections(4, t.order())) {
        const TensorCandidate cand{VertexMap::make(carrier, t, image)};
        if (!is_p_morphism(cand.phi, proc, fam, t)) continue;
        const auto r = verify_tensor_product(cand, proc, fam, targets);
        if (!clone) {
          CHECK_FALSE(r.passed);
          continue;
        }
        if (!r.passed) continue;
        ++passed;
        const auto star = extract_isomorphism(cand, proc, fam);
        CHECK(check_lemma4(VertexMap::make(product, t, image), star).ok());
      }
    }
    CHECK(passed > 0);
  }
}
