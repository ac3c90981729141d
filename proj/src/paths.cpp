#include <cmath>
#include <numbers>

#include "strata/error.hpp"
#include "strata/homology.hpp"

namespace strata {

namespace {

double cross(Vec2 a, Vec2 b) { return a.real() * b.imag() - a.imag() * b.real(); }

constexpr int kMaxCrossingsPerLeg = 1 << 20;

Vec2 centroid(const HalfTranslationSurface& s, int p) {
  Vec2 sum = 0.0;
  for (int k = 0; k < s.num_edges(p); ++k) sum += s.vertex(p, k);
  return sum / static_cast<double>(s.num_edges(p));
}

Vec2 midpoint(const HalfTranslationSurface& s, EdgeRef e) {
  return s.vertex(e.polygon, e.edge) + 0.5 * s.edge_vector(e);
}

}  // namespace

TraceEnd trace(const HalfTranslationSurface& s, const Path& path, double tol) {
  if (path.polygon < 0 || path.polygon >= s.num_polygons()) {
    throw Error(ErrorCode::kPathError, "path starts in a missing polygon");
  }
  const double eps = tol * s.mean_edge_length();
  int p = path.polygon;
  Vec2 z = path.start;
  int entry = -1;  // edge the current point lies on, if any
  Vec2 holonomy = 1.0;

  for (std::size_t leg = 0; leg < path.legs.size(); ++leg) {
    Vec2 r = path.legs[leg];
    if (std::abs(r) <= eps) throw Error(ErrorCode::kPathError, "zero-length leg");
    if (entry >= 0 && cross(s.edge_vector({p, entry}), r) <= 0) {
      throw Error(ErrorCode::kPathError,
                  "leg " + std::to_string(leg) + " leaves the polygon it starts in");
    }
    for (int crossings = 0;; ++crossings) {
      if (crossings > kMaxCrossingsPerLeg) {
        throw Error(ErrorCode::kPathError, "leg crosses too many edges");
      }
      double best_t = 2.0, best_u = 0.0;
      int best = -1;
      for (int i = 0; i < s.num_edges(p); ++i) {
        if (i == entry) continue;
        const Vec2 w = s.edge_vector({p, i});
        const double denom = cross(r, w);
        if (std::abs(denom) <= 1e-15 * std::abs(r) * std::abs(w)) continue;
        const Vec2 d = s.vertex(p, i) - z;
        const double t = cross(d, w) / denom;
        const double u = cross(d, r) / denom;
        const double tol_u = eps / std::abs(w);
        if (t <= eps / std::abs(r) || t > 1 + eps / std::abs(r)) continue;
        if (u < -tol_u || u > 1 + tol_u) continue;
        if (t < best_t) {
          best_t = t;
          best_u = u;
          best = i;
        }
      }
      if (best < 0) {
        z += r;
        entry = -1;
        break;
      }
      const double len = std::abs(s.edge_vector({p, best}));
      if (best_u * len <= eps || (1 - best_u) * len <= eps) {
        throw Error(ErrorCode::kPathError,
                    "leg " + std::to_string(leg) + " passes through a vertex of polygon " +
                        std::to_string(p));
      }
      const bool ends_here = best_t >= 1 - eps / std::abs(r);
      const EdgeRef q = s.partner({p, best});
      const double sign = s.sign_of({p, best});
      z = s.vertex(q.polygon, q.edge) + (1 - best_u) * s.edge_vector(q);
      holonomy *= sign;
      r *= sign * (1 - best_t);
      p = q.polygon;
      entry = q.edge;
      if (ends_here) break;
    }
  }
  return {p, z, holonomy};
}

int turning_degree(const HalfTranslationSurface& s, const Path& path, double tol) {
  if (!is_translation(s)) {
    throw Error(ErrorCode::kInvalidArgument,
                "turning degree needs a translation surface; directions on a "
                "half-translation surface are defined only up to sign");
  }
  if (path.legs.empty()) throw Error(ErrorCode::kPathError, "empty path");
  const TraceEnd end = trace(s, path, tol);
  if (end.polygon != path.polygon ||
      std::abs(end.point - path.start) > tol * s.mean_edge_length()) {
    throw Error(ErrorCode::kPathError, "path does not close");
  }
  double total = 0.0;
  const std::size_t n = path.legs.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double turn = std::arg(path.legs[(k + 1) % n] / path.legs[k]);
    if (std::abs(turn) >= std::numbers::pi - 1e-9) {
      throw Error(ErrorCode::kPathError,
                  "antiparallel junction after leg " + std::to_string(k));
    }
    total += turn;
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

Path walk_path(const HalfTranslationSurface& s, const CycleWalk& w) {
  Path path{w.start_polygon, centroid(s, w.start_polygon), {}};
  int p = w.start_polygon;
  for (int e : w.exits) {
    path.legs.push_back(midpoint(s, {p, e}) - centroid(s, p));
    const EdgeRef q = s.partner({p, e});
    path.legs.push_back(centroid(s, q.polygon) - midpoint(s, q));
    p = q.polygon;
  }
  return path;
}

}  // namespace strata
