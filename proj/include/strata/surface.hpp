#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace strata {

using Vec2 = std::complex<double>;

// Default relative tolerance for closure, gluing and angle checks.
inline constexpr double kGeomTolerance = 1e-9;

struct EdgeRef {
  int polygon = 0;
  int edge = 0;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// Identification of two polygon edges. sign = +1 glues by a translation
// (edge vectors opposite), sign = -1 by z -> -z + c (edge vectors equal).
struct Pairing {
  EdgeRef a;
  EdgeRef b;
  int sign = 1;
};

// Polygons with signed edge gluings. Construction enforces the structural
// invariants (the pairings form a perfect matching on edge slots with no
// self-pairs); geometric invariants are reported by validate().
class HalfTranslationSurface {
 public:
  HalfTranslationSurface(std::vector<std::vector<Vec2>> polygons,
                         std::vector<Pairing> pairings);

  const std::vector<std::vector<Vec2>>& polygons() const { return polygons_; }
  const std::vector<Pairing>& pairings() const { return pairings_; }

  int num_polygons() const { return static_cast<int>(polygons_.size()); }
  int num_pairings() const { return static_cast<int>(pairings_.size()); }
  int num_edges(int polygon) const {
    return static_cast<int>(polygons_[polygon].size());
  }
  int num_slots() const { return static_cast<int>(slot_pairing_.size()); }

  Vec2 edge_vector(EdgeRef e) const { return polygons_[e.polygon][e.edge]; }
  // Position of vertex k of a polygon in its own chart (vertex 0 at origin).
  Vec2 vertex(int polygon, int k) const { return vertices_[polygon][k]; }

  int slot(EdgeRef e) const { return offsets_[e.polygon] + e.edge; }
  EdgeRef slot_ref(int slot) const;
  int pairing_of(EdgeRef e) const { return slot_pairing_[slot(e)]; }
  EdgeRef partner(EdgeRef e) const;
  int sign_of(EdgeRef e) const { return pairings_[pairing_of(e)].sign; }

  double mean_edge_length() const;

 private:
  std::vector<std::vector<Vec2>> polygons_;
  std::vector<Pairing> pairings_;
  std::vector<std::vector<Vec2>> vertices_;
  std::vector<int> offsets_;
  std::vector<int> slot_pairing_;
};

enum class ViolationKind {
  kDegeneratePolygon,
  kZeroEdge,
  kNotClosed,
  kNotSimple,
  kNegativeOrientation,
  kGluingMismatch,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

std::string_view to_string(ViolationKind kind);

std::vector<Violation> validate(const HalfTranslationSurface& s,
                                double tol = kGeomTolerance);

// Throws kInvalidSurface listing the violations, if any.
void require_valid(const HalfTranslationSurface& s, double tol = kGeomTolerance);

struct Corner {
  int polygon = 0;
  int vertex = 0;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct VertexCycle {
  std::vector<Corner> corners;
  double total_angle = 0.0;  // radians
  int angle_multiple = 0;    // total_angle / pi, rounded

  // Zero order of the quadratic differential at this point.
  int quadratic_order() const { return angle_multiple - 2; }
};

// Interior angle of a polygon at vertex k, in (0, 2 pi).
double corner_angle(const HalfTranslationSurface& s, Corner c);

// Cycles of corners around identified vertices, in order of first corner.
// Throws kInvalidSurface when a total angle is not a multiple of pi.
std::vector<VertexCycle> vertex_cycles(const HalfTranslationSurface& s,
                                       double tol = kGeomTolerance);

bool is_connected(const HalfTranslationSurface& s);

int euler_characteristic(const HalfTranslationSurface& s,
                         double tol = kGeomTolerance);
// Throws kDisconnected for a disconnected gluing.
int genus(const HalfTranslationSurface& s, double tol = kGeomTolerance);

enum class StratumKind { kQuadratic, kAbelian };

struct Stratum {
  std::vector<int> orders;  // non-increasing, regular points omitted
  int genus = 0;
  StratumKind kind = StratumKind::kQuadratic;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

std::string to_string(const Stratum& stratum);

// Quadratic stratum of a holomorphic surface. Throws kUnsupportedStratum on a
// cone angle of pi (a simple pole).
Stratum stratum(const HalfTranslationSurface& s, double tol = kGeomTolerance);

// Quadratic orders at every vertex cycle, poles and regular points included.
std::vector<int> vertex_orders(const HalfTranslationSurface& s,
                               double tol = kGeomTolerance);

bool is_translation(const HalfTranslationSurface& s);

// Abelian stratum of a translation surface; throws kInvalidArgument otherwise.
Stratum abelian_stratum(const HalfTranslationSurface& s,
                        double tol = kGeomTolerance);

// JSON document: {"polygons": [[[re, im], ...], ...],
//                 "pairings": [{"a": [p, e], "b": [p, e], "sign": 1}, ...]}
HalfTranslationSurface parse_surface(const nlohmann::json& doc);
HalfTranslationSurface parse_surface(const std::string& text);
HalfTranslationSurface load_surface(const std::string& path);
nlohmann::ordered_json to_json(const HalfTranslationSurface& s);
std::string serialize(const HalfTranslationSurface& s);

}  // namespace strata
