#include "strata/torus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "strata/error.hpp"
#include "strata/twist_orbit.hpp"

namespace strata::torus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr int kMaxRows = 1 << 16;
constexpr int kMaxBisectionDepth = 40;

// u = exp(2 pi i w) taken on the side where |u| <= 1; sin^2 is even in w.
struct SinSeries {
  Complex u;
  double side;  // +1 when Im w >= 0, else -1
};

SinSeries series(Complex w) {
  const double side = w.imag() >= 0 ? 1.0 : -1.0;
  return {std::exp(side * 2.0 * kPi * kI * w), side};
}

// pi^2 / sin^2(pi w)
Complex row_p(Complex w) {
  const auto [u, side] = series(w);
  const Complex d = 1.0 - u;
  return -4.0 * kPi * kPi * u / (d * d);
}

// pi^3 cos(pi w) / sin^3(pi w) = sum_m (w - m)^-3
Complex row_p3(Complex w) {
  const auto [u, side] = series(w);
  const Complex cot = side * kI * (u + 1.0) / (u - 1.0);
  return kPi * row_p(w) * cot;
}

Complex reduce_centered(Complex z, const Tau& tau) {
  LatticeCoords c = lattice_coords(z, tau);
  c.x -= std::round(c.x);
  c.y -= std::round(c.y);
  return c.x + c.y * tau.value();
}

template <typename Row>
Complex sum_rows(Complex z, double tol, Complex base, Row&& row) {
  Complex total = base + row(z, 0);
  int done = 0;
  for (int n = 1; n <= kMaxRows; n *= 2) {
    Complex added = 0.0;
    for (int k = done + 1; k <= n; ++k) added += row(z, k) + row(z, -k);
    total += added;
    done = n;
    // Rows decay geometrically, so the last doubling bounds the tail.
    if (std::abs(added) < tol / 2 && n >= 2) return total;
  }
  throw Error(ErrorCode::kNoConvergence, "lattice row sum did not converge");
}

}  // namespace

Tau::Tau(Complex tau) : tau_(tau) {
  if (!(tau.imag() > 0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in the upper half-plane");
  }
}

LatticeCoords lattice_coords(Complex z, const Tau& tau) {
  const Complex t = tau.value();
  const double y = z.imag() / t.imag();
  return {z.real() - y * t.real(), y};
}

Complex reduce_fundamental(Complex z, const Tau& tau) {
  LatticeCoords c = lattice_coords(z, tau);
  c.x -= std::floor(c.x);
  c.y -= std::floor(c.y);
  if (c.x >= 1.0) c.x = 0.0;
  if (c.y >= 1.0) c.y = 0.0;
  return c.x + c.y * tau.value();
}

double lattice_distance(Complex z, Complex w, const Tau& tau) {
  const Complex d = reduce_centered(z - w, tau);
  const Complex t = tau.value();
  double best = std::abs(d);
  for (int m = -1; m <= 1; ++m) {
    for (int n = -1; n <= 1; ++n) best = std::min(best, std::abs(d - (double(m) + double(n) * t)));
  }
  return best;
}

Complex weierstrass_p(Complex z, const Tau& tau, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  const Complex w = reduce_centered(z, tau);
  if (std::abs(w) < 1e-12) {
    throw Error(ErrorCode::kLatticePole, "p has a pole at lattice points");
  }
  const Complex t = tau.value();
  // Row n: sum_m [(w - m - n tau)^-2 - (m + n tau)^-2].
  return sum_rows(w, tol, -kPi * kPi / 3.0, [t](Complex x, int n) {
    if (n == 0) return row_p(x);
    return row_p(x - static_cast<double>(n) * t) - row_p(static_cast<double>(n) * t);
  });
}

Complex weierstrass_p_prime(Complex z, const Tau& tau, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  const Complex w = reduce_centered(z, tau);
  if (std::abs(w) < 1e-12) {
    throw Error(ErrorCode::kLatticePole, "p' has a pole at lattice points");
  }
  const Complex t = tau.value();
  return -2.0 * sum_rows(w, tol / 2, 0.0, [t](Complex x, int n) {
           return row_p3(x - static_cast<double>(n) * t);
         });
}

Complex half_period(const Tau& tau, HalfPeriod h) {
  switch (h) {
    case HalfPeriod::kNone: return 0.0;
    case HalfPeriod::kH1: return 0.5;
    case HalfPeriod::kH2: return tau.value() / 2.0;
    case HalfPeriod::kH3: return (1.0 + tau.value()) / 2.0;
  }
  return 0.0;
}

HalfPeriodValues halfperiod_values(const Tau& tau, double tol) {
  return {weierstrass_p(half_period(tau, HalfPeriod::kH1), tau, tol),
          weierstrass_p(half_period(tau, HalfPeriod::kH2), tau, tol),
          weierstrass_p(half_period(tau, HalfPeriod::kH3), tau, tol)};
}

ZeroPair zeros(const Tau& tau, Complex c, double tol) {
  const Complex t = tau.value();
  const auto f = [&](Complex z) { return weierstrass_p(z, tau, tol) - c; };
  const double scale = std::min(1.0, t.imag()) * 0.05;

  constexpr int kGrid = 32;
  std::vector<double> mag(kGrid * kGrid, INFINITY);
  const auto at = [&](int i, int j) { return (i / double(kGrid)) + (j / double(kGrid)) * t; };
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const Complex z = at(i, j);
      if (lattice_distance(z, 0.0, tau) < scale) continue;
      mag[i * kGrid + j] = std::abs(f(z));
    }
  }

  std::vector<Complex> roots;
  std::vector<double> residuals;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double m = mag[i * kGrid + j];
      if (!std::isfinite(m)) continue;
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ii = (i + di + kGrid) % kGrid, jj = (j + dj + kGrid) % kGrid;
          if (mag[ii * kGrid + jj] < m) {
            minimum = false;
            break;
          }
        }
      }
      if (!minimum) continue;

      Complex z = at(i, j);
      bool converged = false;
      for (int it = 0; it < 200; ++it) {
        const Complex fz = f(z);
        const Complex dz = weierstrass_p_prime(z, tau, tol);
        if (std::abs(dz) == 0.0) break;
        const Complex step = fz / dz;
        z -= step;
        if (std::abs(step) < 1e-13) {
          converged = true;
          break;
        }
      }
      z = reduce_fundamental(z, tau);
      const double r = std::abs(f(z));
      if (!converged && r > tol) continue;
      const bool seen = std::any_of(roots.begin(), roots.end(), [&](Complex x) {
        return lattice_distance(x, z, tau) < 1e-6;
      });
      if (!seen) {
        roots.push_back(z);
        residuals.push_back(r);
      }
    }
  }

  if (roots.empty() || roots.size() > 2) {
    throw Error(ErrorCode::kNoConvergence,
                "zero search found " + std::to_string(roots.size()) + " zeros, expected 1 or 2");
  }
  ZeroPair out;
  out.x1 = roots[0];
  if (roots.size() == 2) {
    out.x2 = roots[1];
    out.residual = std::max(residuals[0], residuals[1]);
    return out;
  }
  // One zero found: either a double zero or its partner at -x was missed.
  const Complex p1 = weierstrass_p_prime(out.x1, tau, tol);
  if (std::abs(p1) < 1e-4) {
    out.x2 = out.x1;
    out.double_zero = true;
    out.residual = residuals[0];
    return out;
  }
  out.x2 = reduce_fundamental(-out.x1, tau);
  out.residual = std::max(residuals[0], std::abs(f(out.x2)));
  if (out.residual > tol) {
    throw Error(ErrorCode::kNoConvergence, "second zero did not converge");
  }
  return out;
}

double clearance_floor(const Tau& tau) { return 0.05 * std::min(1.0, tau.value().imag()); }

namespace {

struct Singularities {
  Complex shift_value;
  std::vector<Complex> points;  // pole first, then zeros
};

Singularities singularities(const TorusDifferential& d, double tol) {
  Singularities s{0.0, {0.0}};
  if (d.shift != HalfPeriod::kNone) {
    const Complex h = half_period(d.tau, d.shift);
    s.shift_value = weierstrass_p(h, d.tau, tol);
    s.points.push_back(h);
    return s;
  }
  const HalfPeriodValues e = halfperiod_values(d.tau, tol);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(e[i]) <= 100 * tol) {
      s.points.push_back(half_period(d.tau, static_cast<HalfPeriod>(i + 1)));
      return s;
    }
  }
  throw Error(ErrorCode::kOddStratum,
              "p dz^2 has two simple zeros at this tau; its monodromy is not a "
              "function of homology");
}

// Distance from loop through `offset` in the cycle's direction to point p.
double loop_distance(const Tau& tau, CycleKind which, Complex offset, Complex p) {
  const LatticeCoords c = lattice_coords(p - offset, tau);
  const Complex t = tau.value();
  if (which == CycleKind::kAlpha) {
    const double dx = std::abs(c.x - std::round(c.x));
    return dx * t.imag() / std::abs(t);
  }
  const double dy = std::abs(c.y - std::round(c.y));
  return dy * t.imag();
}

}  // namespace

WindingResult winding_ga(const TorusDifferential& d, const TorusCycle& c, int n_samples,
                         double tol) {
  if (n_samples < 4) throw Error(ErrorCode::kInvalidArgument, "need at least 4 samples");
  const Singularities sing = singularities(d, tol);
  const Tau& tau = d.tau;
  const Complex dir = c.which == CycleKind::kAlpha ? tau.value() : Complex{1.0};

  const auto clearance_at = [&](Complex offset) {
    double best = INFINITY;
    for (Complex p : sing.points) best = std::min(best, loop_distance(tau, c.which, offset, p));
    return best;
  };

  WindingResult out;
  if (c.offset) {
    out.offset = *c.offset;
  } else {
    // Offsets k/16 across the cycle; first maximum wins.
    const Complex across = c.which == CycleKind::kAlpha ? Complex{1.0} : tau.value();
    double best = -1.0;
    for (int k = 0; k < 16; ++k) {
      const Complex o = (k / 16.0) * across;
      const double cl = clearance_at(o);
      if (cl > best + 1e-12) {
        best = cl;
        out.offset = o;
      }
    }
  }
  out.clearance = clearance_at(out.offset);
  if (out.clearance < clearance_floor(tau)) {
    throw Error(ErrorCode::kPathError, "loop passes too close to a zero or pole");
  }

  const auto f = [&](double t) {
    ++out.evaluations;
    return weierstrass_p(out.offset + t * dir, tau, tol) - sing.shift_value;
  };
  std::function<double(double, Complex, double, Complex, int)> increment =
      [&](double t0, Complex f0, double t1, Complex f1, int depth) -> double {
    const double step = std::arg(f1 / f0);
    if (std::abs(step) <= kPi / 2) return step;
    if (depth >= kMaxBisectionDepth) {
      throw Error(ErrorCode::kPathError, "argument increments do not settle along the loop");
    }
    const double tm = 0.5 * (t0 + t1);
    const Complex fm = f(tm);
    return increment(t0, f0, tm, fm, depth + 1) + increment(tm, fm, t1, f1, depth + 1);
  };

  double total = 0.0;
  const Complex start = f(0.0);
  Complex prev = start;
  for (int k = 1; k <= n_samples; ++k) {
    const double t0 = (k - 1) / double(n_samples), t1 = k / double(n_samples);
    // Periodicity makes f(1) = f(0); reuse it so the loop closes exactly.
    const Complex cur = k == n_samples ? start : f(t1);
    total += increment(t0, prev, t1, cur, 0);
    prev = cur;
  }
  const double turns = total / (2 * kPi);
  out.winding = std::llround(turns);
  out.winding_residual = std::abs(turns - static_cast<double>(out.winding));
  out.ga = static_cast<int>(((out.winding % 2) + 2) % 2);
  return out;
}

std::array<ParityVector, 3> component_ga_vectors(const Tau& tau, double tol) {
  std::array<ParityVector, 3> out;
  for (int i = 0; i < 3; ++i) {
    const TorusDifferential d{tau, static_cast<HalfPeriod>(i + 1)};
    ParityVector v = ParityVector::zero(1);
    v.set(0, winding_ga(d, {CycleKind::kAlpha, {}}, kDefaultSamples, tol).ga);
    v.set(1, winding_ga(d, {CycleKind::kBeta, {}}, kDefaultSamples, tol).ga);
    out[i] = v;
  }
  return out;
}

bool twist_consistency_check(double tol, TwistCheckOptions opts) {
  const auto vector_at = [&](Complex tau, HalfPeriod h) {
    const TorusDifferential d{Tau(tau), h};
    const int a = winding_ga(d, {CycleKind::kAlpha, {}}, kDefaultSamples, tol).ga;
    const int b = winding_ga(d, {CycleKind::kBeta, {}}, kDefaultSamples, tol).ga;
    ParityVector v = ParityVector::zero(1);
    v.set(0, opts.swap_cycles ? b : a);
    v.set(1, opts.swap_cycles ? a : b);
    return v;
  };
  const Complex tau0 = kI + opts.tau_offset;
  // Twisting along beta sends tau to tau + 1 and (1 + tau)/2 to the new tau/2.
  const ParityVector before = vector_at(tau0, HalfPeriod::kH3);
  const ParityVector after = vector_at(tau0 + 1.0, HalfPeriod::kH2);
  const ParityVector expected_before = ParityVector::parse("11");
  const ParityVector expected_after = ParityVector::parse("01");
  const TwistGenerator beta(ParityVector::unit(1, 1));
  return before == expected_before && after == expected_after &&
         twist_action(before, beta) == after;
}

std::vector<FoliationSample> foliation(const TorusDifferential& d, int n, double tol) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "grid size must be positive");
  Complex shift = 0.0;
  if (d.shift != HalfPeriod::kNone) shift = weierstrass_p(half_period(d.tau, d.shift), d.tau, tol);
  const ZeroPair z = zeros(d.tau, shift, tol);
  const double floor = clearance_floor(d.tau);
  std::vector<FoliationSample> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex p = (i + 0.5) / n + ((j + 0.5) / n) * d.tau.value();
      if (lattice_distance(p, 0.0, d.tau) < floor || lattice_distance(p, z.x1, d.tau) < floor ||
          lattice_distance(p, z.x2, d.tau) < floor) {
        continue;
      }
      const Complex f = weierstrass_p(p, d.tau, tol) - shift;
      double angle = std::fmod(-std::arg(f) / 2.0, kPi);
      if (angle < 0) angle += kPi;
      out.push_back({p.real(), p.imag(), angle});
    }
  }
  return out;
}

}  // namespace strata::torus
