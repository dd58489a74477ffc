#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// signature or similarity code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "egosim/graph.hpp"

namespace egosim::testing {

using Edge = std::pair<int, int>;

/// Raw undirected edge list over nodes 0..n-1, no loops or duplicates, every
/// node with at least one incident edge.
struct RawGraph {
  int n = 0;
  std::vector<Edge> edges;
};

inline RawGraph random_graph(std::mt19937_64& rng, int min_nodes, int max_nodes) {
  RawGraph g;
  g.n = std::uniform_int_distribution<int>(min_nodes, max_nodes)(rng);
  const double p = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
  std::bernoulli_distribution coin(p);
  std::vector<int> deg(g.n, 0);
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (coin(rng)) {
        g.edges.emplace_back(a, b);
        ++deg[a];
        ++deg[b];
      }
  std::uniform_int_distribution<int> pick(0, g.n - 1);
  for (int a = 0; a < g.n; ++a) {
    if (deg[a]) continue;
    int b = pick(rng);
    while (b == a) b = pick(rng);
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
    ++deg[a];
    ++deg[b];
  }
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

inline std::string to_text(const RawGraph& g) {
  std::ostringstream out;
  for (auto [a, b] : g.edges) out << "n" << a << ' ' << "n" << b << '\n';
  return out.str();
}

inline Graph to_graph(const RawGraph& g) {
  std::istringstream in(to_text(g));
  return load_edge_list(in).graph;
}

/// Degree of v counted directly from incident edges.
inline int raw_degree(const RawGraph& g, int v) {
  return static_cast<int>(std::count_if(g.edges.begin(), g.edges.end(),
                                        [v](const Edge& e) { return e.first == v || e.second == v; }));
}

/// Degrees of {v} ∪ N(v), read from the raw edge list, sorted descending.
inline std::vector<std::uint32_t> brute_force_signature(const RawGraph& g, int v) {
  std::vector<int> members{v};
  for (auto [a, b] : g.edges) {
    if (a == v) members.push_back(b);
    if (b == v) members.push_back(a);
  }
  std::vector<std::uint32_t> degrees;
  for (int m : members) degrees.push_back(static_cast<std::uint32_t>(raw_degree(g, m)));
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

inline int raw_max_degree(const RawGraph& g) {
  int best = 0;
  for (int v = 0; v < g.n; ++v) best = std::max(best, raw_degree(g, v));
  return best;
}

}  // namespace egosim::testing
