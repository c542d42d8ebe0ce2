#pragma once

// Small named graphs shared by the unit tests.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gtensor/graph.hpp"

namespace gtensor::testing {

inline Graph k1() { return Graph::make({"a"}, {}, false); }
inline Graph loopy_k1() { return Graph::make({"a"}, {{"a", "a"}}, true); }
inline Graph k2() { return Graph::make({"a", "b"}, {{"a", "b"}}, false); }
inline Graph k2_xy() { return Graph::make({"x", "y"}, {{"x", "y"}}, false); }
inline Graph two_k1() { return Graph::make({"a", "b"}, {}, false); }
inline Graph p3() { return Graph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, false); }
inline Graph k3() { return Graph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, false); }
inline Graph loopy_k2() { return Graph::make({"a", "b"}, {{"a", "b"}, {"a", "a"}, {"b", "b"}}, true); }

inline Graph cycle(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> labels;
  std::vector<LabelPair> edges;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
  return Graph::make(labels, edges, false);
}

inline Graph complete(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<LabelPair> edges;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(labels[i], labels[j]);
  }
  return Graph::make(labels, edges, false);
}

/// Oracle: all |V_H|^|V_G| total maps, filtered by direct edge inspection.
inline std::vector<std::vector<std::size_t>> brute_force_homomorphisms(const Graph& g, const Graph& h) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> image(g.order(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t u = 0; u < g.order() && ok; ++u) {
      for (std::size_t v = u; v < g.order() && ok; ++v) {
        if (g.adjacent(u, v) && !h.adjacent(image[u], image[v])) ok = false;
      }
    }
    if (ok) out.push_back(image);
    std::size_t i = g.order();
    while (i > 0) {
      --i;
      if (++image[i] < h.order()) break;
      image[i] = 0;
      if (i == 0) return out;
    }
  }
}

/// Oracle: some permutation preserves adjacency both ways.
inline bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < g.order() && ok; ++u) {
      for (std::size_t v = u; v < g.order() && ok; ++v) {
        if (g.adjacent(u, v) != h.adjacent(perm[u], perm[v])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every loop-allowing graph on labels v0..v(n-1), one per edge subset.
inline std::vector<Graph> all_labelled_graphs(std::size_t n, bool loops) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<Edge> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = loops ? i : i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<Graph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if ((mask >> b) & 1U) edges.push_back(slots[b]);
    }
    out.push_back(Graph::from_indices(labels, edges, loops));
  }
  return out;
}

}  // namespace gtensor::testing
