#pragma once

#include <span>
#include <vector>

#include "strata/parity.hpp"
#include "strata/surface.hpp"
#include "strata/z2.hpp"

namespace strata {

// Dual graph of a polygon gluing: one node per polygon, one edge per pairing.
// The rotation at a node is the polygon's boundary order, which is
// counter-clockwise for positively oriented polygons.
struct DualGraph {
  struct EdgeEnd {
    int pairing = 0;
    int slot = 0;  // global edge slot of this end
  };
  struct Edge {
    int from = 0;  // polygon of pairing.a
    int to = 0;    // polygon of pairing.b
    int sign = 1;
  };

  int num_nodes = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<EdgeEnd>> rotation;
};

// Throws kDisconnected for a disconnected surface.
DualGraph dual_graph(const HalfTranslationSurface& s);

// Z/2 1-cycle on the dual graph, i.e. a class in H_1(M \ P; Z/2) carried by
// pairings. Every node meets an even number of edge ends.
class Cycle {
 public:
  // Throws kInvalidCycle on an out-of-range pairing or non-zero boundary.
  // Repeated indices cancel.
  Cycle(const HalfTranslationSurface& s, std::span<const int> pairings);
  Cycle(const HalfTranslationSurface& s, Z2Vector support);

  const Z2Vector& support() const { return support_; }
  // Sorted pairing indices.
  std::vector<int> pairings() const;
  bool empty() const { return support_.none(); }

  Cycle& operator+=(const Cycle& other);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  Z2Vector support_;
};

// Boundary of the dual face around vertex cycle v: pairings crossed while
// turning around it, counted mod 2.
Cycle vertex_boundary(const HalfTranslationSurface& s, const VertexCycle& v);

// 2g cycles whose classes form a basis of H_1(M; Z/2). Each is a fundamental
// cycle of a breadth-first spanning tree, kept when independent of the vertex
// boundaries and of the cycles already chosen (in pairing order).
std::vector<Cycle> cycle_basis(const HalfTranslationSurface& s,
                               double tol = kGeomTolerance);

// Holonomy of the flat metric along c: parity of flip gluings crossed.
int ga(const HalfTranslationSurface& s, const Cycle& c);

// ga, restricted to surfaces where it descends to H_1(M; Z/2). Throws
// kOddStratum if any vertex has odd quadratic order.
int ga_on_homology(const HalfTranslationSurface& s, const Cycle& c,
                   double tol = kGeomTolerance);

bool all_orders_even(const HalfTranslationSurface& s, double tol = kGeomTolerance);

// True iff q is the square of an abelian differential.
bool is_square(const HalfTranslationSurface& s, double tol = kGeomTolerance);

// Z/2 cycle on the primal edge graph homologous to c. Each dual edge is pushed
// onto the boundaries of its two polygons, running through vertex 0 of each.
Z2Vector primal_pushoff(const HalfTranslationSurface& s, const Cycle& c);

// Algebraic intersection number mod 2.
int intersection_mod2(const HalfTranslationSurface& s, const Cycle& c1,
                      const Cycle& c2);

struct SymplecticBasis {
  std::vector<Cycle> alpha;
  std::vector<Cycle> beta;

  int genus() const { return static_cast<int>(alpha.size()); }
  // alpha_1..alpha_g, beta_1..beta_g
  std::vector<Cycle> ordered() const;
};

// Symplectic Gram-Schmidt over Z/2 applied to the given cycles (by default
// cycle_basis(s)). Throws kDegenerateForm if the form is degenerate on them.
SymplecticBasis symplectic_basis(const HalfTranslationSurface& s,
                                 double tol = kGeomTolerance);
SymplecticBasis symplectic_basis(const HalfTranslationSurface& s,
                                 std::vector<Cycle> cycles);

// (ga(alpha_1), ..., ga(alpha_g), ga(beta_1), ..., ga(beta_g)).
ParityVector parity_vector(const HalfTranslationSurface& s, const SymplecticBasis& b,
                           double tol = kGeomTolerance);

struct CoverSheet {
  int cover_polygon = 0;
  int base_polygon = 0;
  int sheet = 0;
};

// Double cover on which the pullback of q is the square of an abelian
// differential. Sheet 1 polygons are sheet 0 rotated by pi; a flip gluing
// crosses sheets, a translation gluing stays on its sheet.
struct DoubleCover {
  HalfTranslationSurface cover;
  std::vector<CoverSheet> projection;  // indexed by cover polygon
  bool connected = true;
};

// Cover polygon index of (base polygon, sheet).
inline int cover_polygon(const HalfTranslationSurface& base, int polygon, int sheet) {
  return sheet * base.num_polygons() + polygon;
}

DoubleCover double_cover(const HalfTranslationSurface& s);
nlohmann::ordered_json to_json(const DoubleCover& d);

// A simple cycle visits each touched node through exactly two edge ends and
// has connected support.
bool is_simple(const HalfTranslationSurface& s, const Cycle& c);

// Exit edges (local edge indices) met by walking a simple cycle once, starting
// from polygon a of its lowest pairing. Throws kInvalidCycle if c is not simple.
struct CycleWalk {
  int start_polygon = 0;
  std::vector<int> exits;
};
CycleWalk walk(const HalfTranslationSurface& s, const Cycle& c);

// Number of connected components of the preimage of a simple cycle.
int lift_components(const HalfTranslationSurface& s, const DoubleCover& d,
                     const Cycle& c);

// Closed polygonal curve: straight legs starting at `start` in `polygon`. Each
// leg is a displacement in the chart of the polygon where it begins and
// continues across gluings; a leg ending exactly on an edge crosses it.
struct Path {
  int polygon = 0;
  Vec2 start;
  std::vector<Vec2> legs;
};

// Traced polygon/point after following all legs of a path.
struct TraceEnd {
  int polygon = 0;
  Vec2 point;
  Vec2 holonomy = 1.0;  // product of gluing signs crossed
};

TraceEnd trace(const HalfTranslationSurface& s, const Path& path,
               double tol = kGeomTolerance);

// Total turning of a closed path on a translation surface, in full turns.
// Throws kInvalidArgument for flip gluings and kPathError for a path through a
// vertex, an antiparallel junction or a path that does not close.
int turning_degree(const HalfTranslationSurface& s, const Path& path,
                   double tol = kGeomTolerance);

// Path through polygon centroids and edge midpoints following the exits of a
// walk; closes after one pass when the walk's holonomy is trivial.
Path walk_path(const HalfTranslationSurface& s, const CycleWalk& w);

// The lifted walk of a simple base cycle on the cover, from sheet 0, repeated
// until it closes (one pass when ga = 0, two when ga = 1).
CycleWalk lift_walk(const HalfTranslationSurface& s, const DoubleCover& d,
                    const Cycle& c);

}  // namespace strata
