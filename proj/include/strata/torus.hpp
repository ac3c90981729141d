#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "strata/parity.hpp"

namespace strata::torus {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultSamples = 512;

// Modulus of C / <1, tau>, Im tau > 0.
class Tau {
 public:
  // Throws kInvalidArgument unless Im tau > 0.
  explicit Tau(Complex tau);
  Complex value() const { return tau_; }

 private:
  Complex tau_;
};

// Lattice coordinates (x, y) with z = x + y tau.
struct LatticeCoords {
  double x = 0.0;
  double y = 0.0;
};
LatticeCoords lattice_coords(Complex z, const Tau& tau);
// Representative with both lattice coordinates in [0, 1).
Complex reduce_fundamental(Complex z, const Tau& tau);
// Euclidean distance from z to the nearest point of w + Lambda.
double lattice_distance(Complex z, Complex w, const Tau& tau);

// Weierstrass p for the lattice <1, tau>. The m-direction of the lattice sum
// is done in closed form (sum_m (w - m)^-2 = pi^2 / sin^2(pi w)); rows in the
// tau direction are added symmetrically, doubling the row count until two
// successive estimates differ by less than tol / 2.
// Throws kLatticePole for z in Lambda, kNoConvergence if the rows do not
// settle.
Complex weierstrass_p(Complex z, const Tau& tau, double tol = kDefaultTolerance);
Complex weierstrass_p_prime(Complex z, const Tau& tau, double tol = kDefaultTolerance);

enum class HalfPeriod { kNone, kH1, kH2, kH3 };

// 1/2, tau/2, (1 + tau)/2; kNone maps to 0.
Complex half_period(const Tau& tau, HalfPeriod h);

struct HalfPeriodValues {
  Complex e1, e2, e3;
  Complex operator[](int i) const { return i == 0 ? e1 : (i == 1 ? e2 : e3); }
};
HalfPeriodValues halfperiod_values(const Tau& tau, double tol = kDefaultTolerance);

struct ZeroPair {
  Complex x1, x2;        // reduced to the fundamental domain
  bool double_zero = false;
  double residual = 0.0;  // max |p(x_i) - c|
};

// Zeros of p - c in the fundamental domain: coarse grid scan, Newton
// refinement, and deduplication modulo Lambda.
ZeroPair zeros(const Tau& tau, Complex c, double tol = kDefaultTolerance);
inline ZeroPair p_zeros(const Tau& tau, double tol = kDefaultTolerance) {
  return zeros(tau, 0.0, tol);
}

// q = (p - e) dz^2 with e = p(h) for the selected half-period, or q = p dz^2.
struct TorusDifferential {
  Tau tau;
  HalfPeriod shift = HalfPeriod::kNone;
};

enum class CycleKind { kAlpha, kBeta };

// alpha: t -> offset + t tau; beta: t -> offset + t. Without an offset the
// loop is placed deterministically as far as possible from the singularities.
struct TorusCycle {
  CycleKind which = CycleKind::kAlpha;
  std::optional<Complex> offset;
};

struct WindingResult {
  int ga = 0;
  long long winding = 0;       // total change of arg f, in turns
  double winding_residual = 0;  // distance of the raw turn count from an integer
  Complex offset;
  double clearance = 0.0;  // distance from the loop to the nearest singularity
  int evaluations = 0;
};

// Minimum loop distance from poles and zeros.
double clearance_floor(const Tau& tau);

// Parity of the winding of f = p - shift along the loop, which is the
// monodromy of sqrt(q). Throws kOddStratum when q has simple zeros and
// kPathError when the loop passes within clearance_floor of a singularity.
WindingResult winding_ga(const TorusDifferential& d, const TorusCycle& c,
                         int n_samples = kDefaultSamples, double tol = kDefaultTolerance);

// (Ga(alpha), Ga(beta)) for the three shifted differentials, in half-period
// order h1, h2, h3.
std::array<ParityVector, 3> component_ga_vectors(const Tau& tau,
                                                 double tol = kDefaultTolerance);

struct TwistCheckOptions {
  Complex tau_offset = 0.0;   // perturbation added to both moduli
  bool swap_cycles = false;   // negative control: report (Ga(beta), Ga(alpha))
};

// Numeric Ga at tau = i (double zero at (1 + tau)/2) against tau = 1 + i
// (double zero at tau/2, the same point), compared with the algebraic twist
// along beta.
bool twist_consistency_check(double tol = kDefaultTolerance, TwistCheckOptions opts = {});

struct FoliationSample {
  double x = 0.0, y = 0.0;
  double angle = 0.0;  // horizontal direction of q, in [0, pi)
};

// Horizontal directions of q on an n x n grid over the fundamental domain,
// skipping points within clearance_floor of a singularity.
std::vector<FoliationSample> foliation(const TorusDifferential& d, int n,
                                       double tol = kDefaultTolerance);

}  // namespace strata::torus
