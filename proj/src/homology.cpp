#include <algorithm>
#include <deque>
#include <sstream>

#include "strata/error.hpp"
#include "strata/homology.hpp"

namespace strata {

DualGraph dual_graph(const HalfTranslationSurface& s) {
  if (!is_connected(s)) {
    throw Error(ErrorCode::kDisconnected, "dual graph requested for a disconnected surface");
  }
  DualGraph g;
  g.num_nodes = s.num_polygons();
  for (const Pairing& p : s.pairings()) g.edges.push_back({p.a.polygon, p.b.polygon, p.sign});
  g.rotation.resize(g.num_nodes);
  for (int p = 0; p < s.num_polygons(); ++p) {
    for (int i = 0; i < s.num_edges(p); ++i) {
      g.rotation[p].push_back({s.pairing_of({p, i}), s.slot({p, i})});
    }
  }
  return g;
}

Cycle::Cycle(const HalfTranslationSurface& s, std::span<const int> pairings)
    : support_(static_cast<std::size_t>(s.num_pairings())) {
  for (int k : pairings) {
    if (k < 0 || k >= s.num_pairings()) {
      throw Error(ErrorCode::kInvalidCycle,
                  "pairing index " + std::to_string(k) + " does not belong to the surface");
    }
    support_.flip(static_cast<std::size_t>(k));
  }
  *this = Cycle(s, support_);
}

Cycle::Cycle(const HalfTranslationSurface& s, Z2Vector support)
    : support_(std::move(support)) {
  if (support_.size() != static_cast<std::size_t>(s.num_pairings())) {
    throw Error(ErrorCode::kInvalidCycle, "cycle support has the wrong length");
  }
  std::vector<int> degree(s.num_polygons(), 0);
  for (std::size_t k : support_.support()) {
    const Pairing& p = s.pairings()[k];
    ++degree[p.a.polygon];
    ++degree[p.b.polygon];
  }
  for (int p = 0; p < s.num_polygons(); ++p) {
    if (degree[p] % 2 != 0) {
      throw Error(ErrorCode::kInvalidCycle,
                  "chain has odd boundary at polygon " + std::to_string(p));
    }
  }
}

std::vector<int> Cycle::pairings() const {
  std::vector<int> out;
  for (std::size_t k : support_.support()) out.push_back(static_cast<int>(k));
  return out;
}

Cycle& Cycle::operator+=(const Cycle& other) {
  support_ ^= other.support_;
  return *this;
}

Cycle vertex_boundary(const HalfTranslationSurface& s, const VertexCycle& v) {
  Z2Vector support(static_cast<std::size_t>(s.num_pairings()));
  for (Corner c : v.corners) support.flip(s.pairing_of({c.polygon, c.vertex}));
  return Cycle(s, std::move(support));
}

std::vector<Cycle> cycle_basis(const HalfTranslationSurface& s, double tol) {
  const int g = genus(s, tol);
  if (g == 0) return {};

  // Breadth-first spanning tree from polygon 0, exploring slots in order.
  const int n = s.num_polygons();
  std::vector<int> parent_pairing(n, -1), parent(n, -1);
  std::vector<bool> reached(n, false), tree(s.num_pairings(), false);
  std::deque<int> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    for (int i = 0; i < s.num_edges(p); ++i) {
      const EdgeRef q = s.partner({p, i});
      if (reached[q.polygon]) continue;
      reached[q.polygon] = true;
      parent[q.polygon] = p;
      parent_pairing[q.polygon] = s.pairing_of({p, i});
      tree[parent_pairing[q.polygon]] = true;
      queue.push_back(q.polygon);
    }
  }

  const auto root_path = [&](int node, Z2Vector& acc) {
    for (; parent[node] != -1; node = parent[node]) acc.flip(parent_pairing[node]);
  };

  Z2Span span;
  for (const VertexCycle& v : vertex_cycles(s, tol)) span.insert(vertex_boundary(s, v).support());

  std::vector<Cycle> basis;
  for (int k = 0; k < s.num_pairings(); ++k) {
    if (tree[k]) continue;
    Z2Vector support(static_cast<std::size_t>(s.num_pairings()));
    support.flip(k);
    root_path(s.pairings()[k].a.polygon, support);
    root_path(s.pairings()[k].b.polygon, support);
    if (span.insert(support)) basis.emplace_back(s, std::move(support));
  }
  if (static_cast<int>(basis.size()) != 2 * g) {
    throw Error(ErrorCode::kDegenerateForm,
                "found " + std::to_string(basis.size()) + " independent cycles, expected " +
                    std::to_string(2 * g));
  }
  return basis;
}

int ga(const HalfTranslationSurface& s, const Cycle& c) {
  if (c.support().size() != static_cast<std::size_t>(s.num_pairings())) {
    throw Error(ErrorCode::kInvalidCycle, "cycle does not belong to this surface");
  }
  int flips = 0;
  for (std::size_t k : c.support().support()) {
    if (s.pairings()[k].sign == -1) ++flips;
  }
  return flips % 2;
}

bool all_orders_even(const HalfTranslationSurface& s, double tol) {
  const auto orders = vertex_orders(s, tol);
  return std::all_of(orders.begin(), orders.end(), [](int k) { return k % 2 == 0; });
}

int ga_on_homology(const HalfTranslationSurface& s, const Cycle& c, double tol) {
  for (int k : vertex_orders(s, tol)) {
    if (k % 2 != 0) {
      throw Error(ErrorCode::kOddStratum,
                  "surface has a zero of odd order " + std::to_string(k) +
                      "; monodromy is not a function on H_1(M)");
    }
  }
  return ga(s, c);
}

bool is_square(const HalfTranslationSurface& s, double tol) {
  if (!all_orders_even(s, tol)) return false;
  for (const Cycle& c : cycle_basis(s, tol)) {
    if (ga(s, c) != 0) return false;
  }
  return true;
}

Z2Vector primal_pushoff(const HalfTranslationSurface& s, const Cycle& c) {
  // Crossing pairing (p, i) -> (q, j) is homotopic to the boundary path of p
  // from vertex 0 to vertex i followed by the boundary path of q from vertex
  // j + 1 back to vertex 0.
  Z2Vector out(static_cast<std::size_t>(s.num_pairings()));
  for (std::size_t k : c.support().support()) {
    const Pairing& pr = s.pairings()[k];
    for (int e = 0; e < pr.a.edge; ++e) out.flip(s.pairing_of({pr.a.polygon, e}));
    for (int e = pr.b.edge + 1; e < s.num_edges(pr.b.polygon); ++e) {
      out.flip(s.pairing_of({pr.b.polygon, e}));
    }
  }
  return out;
}

int intersection_mod2(const HalfTranslationSurface& s, const Cycle& c1, const Cycle& c2) {
  // c2 meets a primal edge only at its midpoint, transversally, once per
  // crossing; the pushed-off c1 runs along primal edges.
  return primal_pushoff(s, c1).dot(c2.support()) ? 1 : 0;
}

std::vector<Cycle> SymplecticBasis::ordered() const {
  std::vector<Cycle> out = alpha;
  out.insert(out.end(), beta.begin(), beta.end());
  return out;
}

SymplecticBasis symplectic_basis(const HalfTranslationSurface& s, double tol) {
  return symplectic_basis(s, cycle_basis(s, tol));
}

SymplecticBasis symplectic_basis(const HalfTranslationSurface& s, std::vector<Cycle> cycles) {
  SymplecticBasis out;
  std::deque<Cycle> rest(cycles.begin(), cycles.end());
  while (!rest.empty()) {
    Cycle a = rest.front();
    rest.pop_front();
    auto it = std::find_if(rest.begin(), rest.end(),
                           [&](const Cycle& b) { return intersection_mod2(s, a, b) == 1; });
    if (it == rest.end()) {
      throw Error(ErrorCode::kDegenerateForm,
                  "intersection form is degenerate on the given cycles");
    }
    Cycle b = *it;
    rest.erase(it);
    for (Cycle& c : rest) {
      const int with_b = intersection_mod2(s, c, b);
      const int with_a = intersection_mod2(s, c, a);
      if (with_b) c += a;
      if (with_a) c += b;
    }
    out.alpha.push_back(std::move(a));
    out.beta.push_back(std::move(b));
  }
  return out;
}

ParityVector parity_vector(const HalfTranslationSurface& s, const SymplecticBasis& b,
                           double tol) {
  const int g = b.genus();
  ParityVector v = ParityVector::zero(g);
  for (int i = 0; i < g; ++i) {
    v.set(i, ga_on_homology(s, b.alpha[i], tol));
    v.set(g + i, ga_on_homology(s, b.beta[i], tol));
  }
  return v;
}

}  // namespace strata
