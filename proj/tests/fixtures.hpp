#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "strata/homology.hpp"
#include "strata/surface.hpp"

namespace strata::testing {

inline std::string data_path(const std::string& name) {
  return std::string(STRATA_TEST_DATA) + "/" + name;
}

inline HalfTranslationSurface load(const std::string& name) {
  return load_surface(data_path(name));
}

// Closed surfaces with holomorphic quadratic differentials, all orders even.
inline const std::vector<std::string>& even_fixtures() {
  static const std::vector<std::string> names = {
      "square_torus.json",         "two_square_torus.json",  "two_square_flip_torus.json",
      "octagon_h2.json",           "hexagons_h1_1.json",     "hexagons_q2_2_2.json",
      "hexagons_q2_2_2_square.json", "octagons_q4_4.json",   "octagons_q4_4_square.json",
      "octagons_h2_2.json",        "hexagons_q6_2.json",     "octagons_q4_4_4.json",
      "octagons_q16.json"};
  return names;
}

// Even fixtures whose differential is not a global square.
inline const std::vector<std::string>& nonsquare_fixtures() {
  static const std::vector<std::string> names = {
      "hexagons_q2_2_2.json", "octagons_q4_4.json", "hexagons_q6_2.json",
      "octagons_q4_4_4.json", "octagons_q16.json"};
  return names;
}

// Holomorphic fixtures with at least one odd-order zero.
inline const std::vector<std::string>& odd_fixtures() {
  static const std::vector<std::string> names = {"octagons_q1_1_1_1.json",
                                                 "octagons_q7_4_1.json"};
  return names;
}

// Fixtures with simple poles, usable only where orders < 0 are allowed.
inline const std::vector<std::string>& pole_fixtures() {
  static const std::vector<std::string> names = {"pillowcase.json", "squares_q2_m1_m1.json",
                                                 "squares_q5_m1.json"};
  return names;
}

inline std::vector<std::string> holomorphic_fixtures() {
  std::vector<std::string> all = even_fixtures();
  all.insert(all.end(), odd_fixtures().begin(), odd_fixtures().end());
  return all;
}

inline std::vector<std::string> all_fixtures() {
  std::vector<std::string> all = holomorphic_fixtures();
  all.insert(all.end(), pole_fixtures().begin(), pole_fixtures().end());
  return all;
}

// Union-find over small integer ranges.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) { return parent_[x] == x ? x : parent_[x] = find(parent_[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Vertex count computed directly from the gluing: corner (p, i) is the start
// of edge i. Both gluing types reverse the boundary direction (a translation
// meets an oppositely oriented edge, a flip rotates an equal one by pi), so
// the start of one edge is identified with the end of the other.
inline int count_vertices(const HalfTranslationSurface& s) {
  std::vector<int> base(s.num_polygons() + 1, 0);
  for (int p = 0; p < s.num_polygons(); ++p) base[p + 1] = base[p] + s.num_edges(p);
  auto corner = [&](int p, int i) { return base[p] + (i % s.num_edges(p)); };
  UnionFind uf(base.back());
  for (const Pairing& pr : s.pairings()) {
    uf.unite(corner(pr.a.polygon, pr.a.edge), corner(pr.b.polygon, pr.b.edge + 1));
    uf.unite(corner(pr.a.polygon, pr.a.edge + 1), corner(pr.b.polygon, pr.b.edge));
  }
  std::set<int> roots;
  for (int c = 0; c < base.back(); ++c) roots.insert(uf.find(c));
  return static_cast<int>(roots.size());
}

// Fundamental cycles of a spanning forest of the dual graph, built here
// independently of the library's basis code.
inline std::vector<std::vector<int>> fundamental_cycles(const HalfTranslationSurface& s) {
  const int n = s.num_polygons();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, pairing)
  for (int k = 0; k < s.num_pairings(); ++k) {
    const Pairing& pr = s.pairings()[k];
    adj[pr.a.polygon].push_back({pr.b.polygon, k});
    adj[pr.b.polygon].push_back({pr.a.polygon, k});
  }
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, -1);
  std::vector<bool> tree(s.num_pairings(), false);
  for (int root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (auto [v, k] : adj[u]) {
        if (depth[v] >= 0) continue;
        depth[v] = depth[u] + 1;
        parent[v] = u;
        parent_edge[v] = k;
        tree[k] = true;
        stack.push_back(v);
      }
    }
  }
  std::vector<std::vector<int>> out;
  for (int k = 0; k < s.num_pairings(); ++k) {
    if (tree[k]) continue;
    std::vector<int> cyc = {k};
    int u = s.pairings()[k].a.polygon, v = s.pairings()[k].b.polygon;
    while (u != v) {
      if (depth[u] < depth[v]) std::swap(u, v);
      cyc.push_back(parent_edge[u]);
      u = parent[u];
    }
    out.push_back(cyc);
  }
  return out;
}

// Random element of the dual-graph cycle space.
template <class Rng>
Cycle random_cycle(const HalfTranslationSurface& s, Rng& rng) {
  const auto basis = fundamental_cycles(s);
  std::vector<int> ids;
  std::bernoulli_distribution coin(0.5);
  for (const auto& c : basis) {
    if (coin(rng)) ids.insert(ids.end(), c.begin(), c.end());
  }
  return Cycle(s, ids);
}

// Random simple closed walk in the dual graph: wander until a polygon repeats
// and keep the loop from its first visit.
template <class Rng>
Cycle random_simple_cycle(const HalfTranslationSurface& s, Rng& rng) {
  const int n = s.num_polygons();
  std::vector<std::vector<std::pair<int, int>>> ends(n);  // (pairing, other polygon)
  for (int k = 0; k < s.num_pairings(); ++k) {
    const Pairing& pr = s.pairings()[k];
    ends[pr.a.polygon].push_back({k, pr.b.polygon});
    ends[pr.b.polygon].push_back({k, pr.a.polygon});
  }
  for (;;) {
    int node = std::uniform_int_distribution<int>(0, n - 1)(rng);
    std::vector<int> visited_at(n, -1);
    std::vector<int> edges;
    int last = -1;
    visited_at[node] = 0;
    for (;;) {
      std::vector<std::pair<int, int>> options;
      for (auto e : ends[node]) {
        if (e.first != last) options.push_back(e);
      }
      auto [k, next] =
          options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      edges.push_back(k);
      last = k;
      if (visited_at[next] >= 0) {
        std::vector<int> loop(edges.begin() + visited_at[next], edges.end());
        std::set<int> distinct(loop.begin(), loop.end());
        if (distinct.size() == loop.size()) return Cycle(s, loop);
        break;
      }
      visited_at[next] = static_cast<int>(edges.size());
      node = next;
    }
  }
}

}  // namespace strata::testing
