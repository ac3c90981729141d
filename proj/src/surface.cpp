#include "strata/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "strata/error.hpp"

namespace strata {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedDocument: return "malformed_document";
    case ErrorCode::kDanglingReference: return "dangling_reference";
    case ErrorCode::kSelfPaired: return "self_paired_edge";
    case ErrorCode::kInvalidSurface: return "invalid_surface";
    case ErrorCode::kDisconnected: return "disconnected_surface";
    case ErrorCode::kUnsupportedStratum: return "unsupported_stratum";
    case ErrorCode::kOddStratum: return "odd_stratum";
    case ErrorCode::kInvalidCycle: return "invalid_cycle";
    case ErrorCode::kDegenerateForm: return "degenerate_form";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kDegenerateSeed: return "degenerate_seed";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kLatticePole: return "lattice_pole";
    case ErrorCode::kNoConvergence: return "no_convergence";
    case ErrorCode::kPathError: return "path_error";
    case ErrorCode::kIo: return "io_error";
  }
  return "unknown";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDegeneratePolygon: return "degenerate_polygon";
    case ViolationKind::kZeroEdge: return "zero_edge";
    case ViolationKind::kNotClosed: return "not_closed";
    case ViolationKind::kNotSimple: return "not_simple";
    case ViolationKind::kNegativeOrientation: return "negative_orientation";
    case ViolationKind::kGluingMismatch: return "gluing_mismatch";
  }
  return "unknown";
}

namespace {

std::string ref_string(EdgeRef e) {
  std::ostringstream os;
  os << "(" << e.polygon << ", " << e.edge << ")";
  return os.str();
}

double cross(Vec2 a, Vec2 b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Closed-segment intersection test with an absolute tolerance.
bool segments_touch(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2, double tol) {
  const double d1 = cross(p2 - p1, q1 - p1);
  const double d2 = cross(p2 - p1, q2 - p1);
  const double d3 = cross(q2 - q1, p1 - q1);
  const double d4 = cross(q2 - q1, p2 - q1);
  const double lp = std::abs(p2 - p1);
  const double lq = std::abs(q2 - q1);
  const auto side = [](double d, double scale, double t) {
    return d > t * scale ? 1 : (d < -t * scale ? -1 : 0);
  };
  const int s1 = side(d1, lp, tol), s2 = side(d2, lp, tol);
  const int s3 = side(d3, lq, tol), s4 = side(d4, lq, tol);
  if (s1 * s2 < 0 && s3 * s4 < 0) return true;
  const auto on_segment = [tol](Vec2 a, Vec2 b, Vec2 x) {
    const Vec2 ab = b - a;
    const double t = std::real((x - a) * std::conj(ab)) / std::norm(ab);
    const double len = std::abs(ab);
    return t >= -tol / len && t <= 1 + tol / len &&
           std::abs(cross(ab, x - a)) <= tol * len;
  };
  return (s1 == 0 && on_segment(p1, p2, q1)) || (s2 == 0 && on_segment(p1, p2, q2)) ||
         (s3 == 0 && on_segment(q1, q2, p1)) || (s4 == 0 && on_segment(q1, q2, p2));
}

}  // namespace

HalfTranslationSurface::HalfTranslationSurface(
    std::vector<std::vector<Vec2>> polygons, std::vector<Pairing> pairings)
    : polygons_(std::move(polygons)), pairings_(std::move(pairings)) {
  offsets_.reserve(polygons_.size() + 1);
  int total = 0;
  for (const auto& poly : polygons_) {
    offsets_.push_back(total);
    total += static_cast<int>(poly.size());
  }
  offsets_.push_back(total);
  slot_pairing_.assign(total, -1);

  for (int k = 0; k < num_pairings(); ++k) {
    const Pairing& p = pairings_[k];
    for (EdgeRef e : {p.a, p.b}) {
      if (e.polygon < 0 || e.polygon >= num_polygons() || e.edge < 0 ||
          e.edge >= num_edges(e.polygon)) {
        throw Error(ErrorCode::kDanglingReference,
                    "pairing " + std::to_string(k) + " references missing edge " +
                        ref_string(e));
      }
    }
    if (p.a == p.b) {
      throw Error(ErrorCode::kSelfPaired,
                  "pairing " + std::to_string(k) + " pairs edge " +
                      ref_string(p.a) + " with itself");
    }
    if (p.sign != 1 && p.sign != -1) {
      throw Error(ErrorCode::kMalformedDocument,
                  "pairing " + std::to_string(k) + " has sign " +
                      std::to_string(p.sign) + ", expected 1 or -1");
    }
    for (EdgeRef e : {p.a, p.b}) {
      int& owner = slot_pairing_[slot(e)];
      if (owner != -1) {
        throw Error(ErrorCode::kMalformedDocument,
                    "edge " + ref_string(e) + " appears in pairings " +
                        std::to_string(owner) + " and " + std::to_string(k));
      }
      owner = k;
    }
  }
  for (int s = 0; s < total; ++s) {
    if (slot_pairing_[s] == -1) {
      throw Error(ErrorCode::kMalformedDocument,
                  "edge " + ref_string(slot_ref(s)) + " is not paired");
    }
  }

  vertices_.reserve(polygons_.size());
  for (const auto& poly : polygons_) {
    std::vector<Vec2> v(poly.size());
    Vec2 acc = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      v[i] = acc;
      acc += poly[i];
    }
    vertices_.push_back(std::move(v));
  }
}

EdgeRef HalfTranslationSurface::slot_ref(int slot) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), slot);
  const int polygon = static_cast<int>(it - offsets_.begin()) - 1;
  return {polygon, slot - offsets_[polygon]};
}

EdgeRef HalfTranslationSurface::partner(EdgeRef e) const {
  const Pairing& p = pairings_[pairing_of(e)];
  return p.a == e ? p.b : p.a;
}

double HalfTranslationSurface::mean_edge_length() const {
  double sum = 0.0;
  int n = 0;
  for (const auto& poly : polygons_) {
    for (Vec2 w : poly) {
      sum += std::abs(w);
      ++n;
    }
  }
  return n == 0 ? 0.0 : sum / n;
}

std::vector<Violation> validate(const HalfTranslationSurface& s, double tol) {
  std::vector<Violation> out;
  const double scale = s.mean_edge_length();
  const double eps = tol * (scale > 0 ? scale : 1.0);

  for (int p = 0; p < s.num_polygons(); ++p) {
    const auto& poly = s.polygons()[p];
    const int n = static_cast<int>(poly.size());
    const std::string name = "polygon " + std::to_string(p);
    if (n < 3) {
      out.push_back({ViolationKind::kDegeneratePolygon,
                     name + " has " + std::to_string(n) + " edges"});
      continue;
    }
    bool zero_edge = false;
    for (int i = 0; i < n; ++i) {
      if (std::abs(poly[i]) <= eps) {
        out.push_back({ViolationKind::kZeroEdge,
                       "edge " + ref_string({p, i}) + " has zero length"});
        zero_edge = true;
      }
    }
    const Vec2 sum = std::accumulate(poly.begin(), poly.end(), Vec2{0.0});
    if (std::abs(sum) > eps) {
      std::ostringstream os;
      os.precision(3);
      os << name << " does not close (residual " << std::abs(sum) << ")";
      out.push_back({ViolationKind::kNotClosed, os.str()});
      continue;
    }
    if (zero_edge) continue;

    double area2 = 0.0;
    for (int i = 0; i < n; ++i) area2 += cross(s.vertex(p, i), s.vertex(p, (i + 1) % n));
    if (area2 <= 0) {
      out.push_back({ViolationKind::kNegativeOrientation,
                     name + " is not positively oriented"});
    }

    bool simple = true;
    for (int i = 0; i < n && simple; ++i) {
      // Adjacent edges folding back onto each other.
      const Vec2 prev = poly[(i + n - 1) % n];
      if (std::abs(cross(prev, poly[i])) <= tol * std::abs(prev) * std::abs(poly[i]) &&
          std::real(prev * std::conj(poly[i])) < 0) {
        simple = false;
        break;
      }
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (segments_touch(s.vertex(p, i), s.vertex(p, (i + 1) % n), s.vertex(p, j),
                           s.vertex(p, (j + 1) % n), tol)) {
          simple = false;
          break;
        }
      }
    }
    if (!simple) {
      out.push_back({ViolationKind::kNotSimple, name + " is not simple"});
    }
  }

  for (int k = 0; k < s.num_pairings(); ++k) {
    const Pairing& pr = s.pairings()[k];
    const Vec2 w = s.edge_vector(pr.a);
    const Vec2 w2 = s.edge_vector(pr.b);
    if (std::abs(w2 + static_cast<double>(pr.sign) * w) > eps) {
      out.push_back({ViolationKind::kGluingMismatch,
                     "pairing " + std::to_string(k) + " " + ref_string(pr.a) + "-" +
                         ref_string(pr.b) + " with sign " + std::to_string(pr.sign) +
                         " needs w' = " + (pr.sign == 1 ? "-w" : "w")});
    }
  }
  return out;
}

void require_valid(const HalfTranslationSurface& s, double tol) {
  const auto violations = validate(s, tol);
  if (violations.empty()) return;
  std::string msg = "invalid surface:";
  for (const auto& v : violations) msg += " " + v.message + ";";
  msg.pop_back();
  throw Error(ErrorCode::kInvalidSurface, msg);
}

double corner_angle(const HalfTranslationSurface& s, Corner c) {
  const auto& poly = s.polygons()[c.polygon];
  const int n = static_cast<int>(poly.size());
  const Vec2 in = poly[(c.vertex + n - 1) % n];
  const Vec2 out = poly[c.vertex];
  return std::numbers::pi - std::arg(out / in);
}

std::vector<VertexCycle> vertex_cycles(const HalfTranslationSurface& s, double tol) {
  std::vector<std::vector<bool>> seen(s.num_polygons());
  for (int p = 0; p < s.num_polygons(); ++p) seen[p].assign(s.num_edges(p), false);

  std::vector<VertexCycle> cycles;
  for (int p = 0; p < s.num_polygons(); ++p) {
    for (int v = 0; v < s.num_edges(p); ++v) {
      if (seen[p][v]) continue;
      VertexCycle cycle;
      Corner c{p, v};
      while (!seen[c.polygon][c.vertex]) {
        seen[c.polygon][c.vertex] = true;
        cycle.corners.push_back(c);
        cycle.total_angle += corner_angle(s, c);
        // The vertex starts edge c.vertex and ends the partner edge.
        const EdgeRef q = s.partner({c.polygon, c.vertex});
        c = {q.polygon, (q.edge + 1) % s.num_edges(q.polygon)};
      }
      const double multiple = cycle.total_angle / std::numbers::pi;
      cycle.angle_multiple = static_cast<int>(std::lround(multiple));
      if (std::abs(multiple - cycle.angle_multiple) > tol * cycle.corners.size() ||
          cycle.angle_multiple < 1) {
        std::ostringstream os;
        os.precision(12);
        os << "vertex at corner (" << p << ", " << v << ") has total angle "
           << multiple << " pi, not a positive multiple of pi";
        throw Error(ErrorCode::kInvalidSurface, os.str());
      }
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

bool is_connected(const HalfTranslationSurface& s) {
  const int n = s.num_polygons();
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const Pairing& p : s.pairings()) {
    const int a = find(p.a.polygon), b = find(p.b.polygon);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

int euler_characteristic(const HalfTranslationSurface& s, double tol) {
  const int v = static_cast<int>(vertex_cycles(s, tol).size());
  return v - s.num_pairings() + s.num_polygons();
}

int genus(const HalfTranslationSurface& s, double tol) {
  if (!is_connected(s)) {
    throw Error(ErrorCode::kDisconnected,
                "gluing has more than one connected component; genus undefined");
  }
  const int chi = euler_characteristic(s, tol);
  if (chi > 2 || (2 - chi) % 2 != 0) {
    throw Error(ErrorCode::kInvalidSurface,
                "Euler characteristic " + std::to_string(chi) +
                    " is not that of a closed orientable surface");
  }
  return (2 - chi) / 2;
}

std::vector<int> vertex_orders(const HalfTranslationSurface& s, double tol) {
  std::vector<int> orders;
  for (const auto& c : vertex_cycles(s, tol)) orders.push_back(c.quadratic_order());
  return orders;
}

std::string to_string(const Stratum& stratum) {
  std::string out = stratum.kind == StratumKind::kQuadratic ? "Q_" : "H_";
  out += std::to_string(stratum.genus) + "(";
  for (std::size_t i = 0; i < stratum.orders.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(stratum.orders[i]);
  }
  return out + ")";
}

Stratum stratum(const HalfTranslationSurface& s, double tol) {
  Stratum out;
  out.genus = genus(s, tol);
  for (int k : vertex_orders(s, tol)) {
    if (k < 0) {
      throw Error(ErrorCode::kUnsupportedStratum,
                  "surface has a cone angle of pi (order " + std::to_string(k) +
                      "); only holomorphic strata are supported");
    }
    if (k > 0) out.orders.push_back(k);
  }
  std::sort(out.orders.begin(), out.orders.end(), std::greater<>());
  const int sum = std::accumulate(out.orders.begin(), out.orders.end(), 0);
  if (sum != 4 * out.genus - 4) {
    throw Error(ErrorCode::kInvalidSurface,
                "orders sum to " + std::to_string(sum) + " but 4g-4 = " +
                    std::to_string(4 * out.genus - 4));
  }
  return out;
}

bool is_translation(const HalfTranslationSurface& s) {
  return std::all_of(s.pairings().begin(), s.pairings().end(),
                     [](const Pairing& p) { return p.sign == 1; });
}

Stratum abelian_stratum(const HalfTranslationSurface& s, double tol) {
  if (!is_translation(s)) {
    throw Error(ErrorCode::kInvalidArgument,
                "abelian stratum requested for a surface with flip gluings");
  }
  Stratum q = stratum(s, tol);
  Stratum out{{}, q.genus, StratumKind::kAbelian};
  for (int k : q.orders) {
    if (k % 2 != 0) {
      throw Error(ErrorCode::kInvalidSurface,
                  "translation surface with odd quadratic order " + std::to_string(k));
    }
    out.orders.push_back(k / 2);
  }
  return out;
}

}  // namespace strata
