#pragma once

// Instance catalogues and the verification suites behind `graphtensor verify`.
// Reports are line-oriented: "<suite> <instance> <status> <detail>", with
// status pass, fail or observed (no expected verdict).

#include <string>
#include <string_view>
#include <vector>

#include "gtensor/graph.hpp"
#include "gtensor/hom_tensor.hpp"
#include "gtensor/product.hpp"

namespace gtensor::suites {

/// K1, K2, P3 (a-b-c), K3 on labels a, b, c.
Graph named_graph(std::string_view name);

/// Every loop-allowing graph on labels a, b, ... with `order` vertices, one
/// per edge subset.
std::vector<Graph> labelled_graphs(std::size_t order);

struct NamedGraph {
  std::string name;  ///< "n<order>:<edges>", e.g. "n3:aa,ab"
  Graph graph;
};

/// Loop-allowing graphs on 1..max_order vertices up to isomorphism (2, 6 and
/// 20 of them for orders 1, 2, 3), first representative in edge-subset order.
std::vector<NamedGraph> small_graph_catalogue(std::size_t max_order);

struct NamedFamily {
  std::string name;
  GraphFamily family;
};

/// Two factors from {K1, K2, P3, K3} and three from {K1, K2}, each with two
/// structure variants.
std::vector<NamedFamily> product_catalogue();
/// Two and three factors from {K2, P3}; D = {1} on two indices, {1, 3} on three.
std::vector<NamedFamily> permutation_catalogue();

struct NamedHomFamily {
  std::string group;  ///< "G1,G2->H1,H2"
  std::string name;   ///< images of φ_1 and φ_2
  HomFamily family;
};

/// Every pair of homomorphisms between graphs of {K2, P3, K3}, families carrying
/// order 1 < 2 and D = {1}.
std::vector<NamedHomFamily> hom_catalogue();

struct Line {
  std::string suite;
  std::string instance;
  std::string status;
  std::string detail;
};

struct Report {
  std::vector<Line> lines;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  void append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }
};

/// identities, constraints, permutability, universal, projections, theorem2,
/// tensor, hom-preserving, theorem7, congruence.
const std::vector<std::string>& suite_names();

/// Throws PreconditionViolated for an unknown name; "all" runs every suite in order.
Report run(std::string_view name, const SearchBudget& budget = SearchBudget::standard());

std::string format(const Report& report);

}  // namespace gtensor::suites
