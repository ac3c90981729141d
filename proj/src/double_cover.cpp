#include <numeric>

#include "strata/error.hpp"
#include "strata/homology.hpp"

namespace strata {

DoubleCover double_cover(const HalfTranslationSurface& s) {
  const int n = s.num_polygons();
  std::vector<std::vector<Vec2>> polygons;
  polygons.reserve(2 * n);
  std::vector<CoverSheet> projection;
  for (int sheet = 0; sheet < 2; ++sheet) {
    for (int p = 0; p < n; ++p) {
      std::vector<Vec2> poly = s.polygons()[p];
      if (sheet == 1) {
        for (Vec2& w : poly) w = Vec2(0.0 - w.real(), 0.0 - w.imag());  // no -0.0
      }
      polygons.push_back(std::move(poly));
      projection.push_back({cover_polygon(s, p, sheet), p, sheet});
    }
  }

  // Base pairing k lifts to cover pairings 2k and 2k + 1.
  std::vector<Pairing> pairings;
  pairings.reserve(2 * s.num_pairings());
  for (const Pairing& pr : s.pairings()) {
    for (int sheet = 0; sheet < 2; ++sheet) {
      const int other = pr.sign == 1 ? sheet : 1 - sheet;
      pairings.push_back({{cover_polygon(s, pr.a.polygon, sheet), pr.a.edge},
                          {cover_polygon(s, pr.b.polygon, other), pr.b.edge},
                          1});
    }
  }

  DoubleCover d{HalfTranslationSurface(std::move(polygons), std::move(pairings)),
                std::move(projection), true};
  d.connected = is_connected(d.cover);
  return d;
}

nlohmann::ordered_json to_json(const DoubleCover& d) {
  nlohmann::ordered_json doc;
  doc["surface"] = to_json(d.cover);
  doc["projection"] = nlohmann::ordered_json::array();
  for (const CoverSheet& c : d.projection) {
    doc["projection"].push_back({c.cover_polygon, c.base_polygon, c.sheet});
  }
  doc["connected"] = d.connected;
  return doc;
}

namespace {

// Support edge ends (global slots) at each polygon.
std::vector<std::vector<EdgeRef>> support_ends(const HalfTranslationSurface& s,
                                               const Cycle& c) {
  std::vector<std::vector<EdgeRef>> ends(s.num_polygons());
  for (int k : c.pairings()) {
    const Pairing& p = s.pairings()[k];
    ends[p.a.polygon].push_back(p.a);
    ends[p.b.polygon].push_back(p.b);
  }
  return ends;
}

}  // namespace

bool is_simple(const HalfTranslationSurface& s, const Cycle& c) {
  if (c.empty()) return false;
  const auto ends = support_ends(s, c);
  for (const auto& e : ends) {
    if (!e.empty() && e.size() != 2) return false;
  }
  // Connected support: union-find over touched polygons.
  std::vector<int> parent(s.num_polygons());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k : c.pairings()) {
    parent[find(s.pairings()[k].a.polygon)] = find(s.pairings()[k].b.polygon);
  }
  int roots = 0;
  for (int p = 0; p < s.num_polygons(); ++p) {
    if (!ends[p].empty() && find(p) == p) ++roots;
  }
  return roots == 1;
}

CycleWalk walk(const HalfTranslationSurface& s, const Cycle& c) {
  if (!is_simple(s, c)) {
    throw Error(ErrorCode::kInvalidCycle, "cycle is not simple");
  }
  const auto ends = support_ends(s, c);
  const Pairing& first = s.pairings()[c.pairings().front()];
  CycleWalk w{first.a.polygon, {}};
  EdgeRef exit = first.a;
  while (true) {
    w.exits.push_back(exit.edge);
    const EdgeRef entry = s.partner(exit);
    const auto& here = ends[entry.polygon];
    const EdgeRef next = here[0] == entry ? here[1] : here[0];
    if (next == first.a) break;
    exit = next;
  }
  return w;
}

CycleWalk lift_walk(const HalfTranslationSurface& s, const DoubleCover& d,
                    const Cycle& c) {
  const CycleWalk base = walk(s, c);
  const int start = cover_polygon(s, base.start_polygon, 0);
  CycleWalk out{start, {}};
  int current = start;
  for (int pass = 0; pass < 2; ++pass) {
    for (int e : base.exits) {
      out.exits.push_back(e);
      current = d.cover.partner({current, e}).polygon;
    }
    if (current == start) return out;
  }
  throw Error(ErrorCode::kInvalidCycle, "lifted walk did not close after two passes");
}

int lift_components(const HalfTranslationSurface& s, const DoubleCover& d, const Cycle& c) {
  const CycleWalk base = walk(s, c);
  const CycleWalk lifted = lift_walk(s, d, c);
  return lifted.exits.size() == base.exits.size() ? 2 : 1;
}

}  // namespace strata
