// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "component_matrix.hpp"
#include "fixtures.hpp"
#include "strata/homology.hpp"
#include "strata/torus.hpp"
#include "strata/twist_orbit.hpp"

namespace {

using namespace strata;
namespace st = strata::testing;

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

Outcome orbit_counts() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (int g = 1; g <= 6; ++g) {
    const auto gens = paper_generators(g);
    const std::uint64_t full = (std::uint64_t{1} << (2 * g)) - 1;
    std::vector<std::uint64_t> seeds;
    if (g <= 3) {
      for (std::uint64_t s = 1; s <= full; ++s) seeds.push_back(s);
    } else {
      while (seeds.size() < 100) {
        const std::uint64_t s = rng() & full;
        if (s != 0) seeds.push_back(s);
      }
    }
    for (std::uint64_t s : seeds) {
      const auto orb = orbit(ParityVector(g, s), gens);
      o.require(orb.size() == full && !orb.front().is_zero(),
                "g=" + std::to_string(g) + " seed " + ParityVector(g, s).to_string() +
                    " orbit " + std::to_string(orb.size()));
    }
  }
  return o;
}

Outcome torus_values() {
  Outcome o;
  using namespace strata::torus;
  const TorusDifferential i{Tau(Complex(0, 1)), HalfPeriod::kNone};
  const TorusDifferential one_i{Tau(Complex(1, 1)), HalfPeriod::kNone};
  const int a0 = winding_ga(i, {CycleKind::kAlpha, {}}).ga;
  const int b0 = winding_ga(i, {CycleKind::kBeta, {}}).ga;
  const int a1 = winding_ga(one_i, {CycleKind::kAlpha, {}}).ga;
  const int b1 = winding_ga(one_i, {CycleKind::kBeta, {}}).ga;
  o.require(a0 == 1 && b0 == 1, "tau=i gave (" + std::to_string(a0) + "," + std::to_string(b0) + ")");
  o.require(a1 == 0 && b1 == 1,
            "tau=1+i gave (" + std::to_string(a1) + "," + std::to_string(b1) + ")");
  const double p = std::abs(weierstrass_p(Complex(0.5, 0.5), Tau(Complex(0, 1)), 1e-9));
  o.require(p < 1e-8, "|p((1+i)/2; i)| = " + std::to_string(p));
  return o;
}

Outcome three_components() {
  Outcome o;
  using namespace strata::torus;
  const std::multiset<std::string> expected = {"01", "10", "11"};
  for (Complex t : {Complex(0, 1), Complex(1, 1), Complex(0, 2), Complex(0.5, 1)}) {
    const auto v = component_ga_vectors(Tau(t));
    const std::multiset<std::string> got = {v[0].to_string(), v[1].to_string(), v[2].to_string()};
    o.require(got == expected, "multiset mismatch at tau=" + std::to_string(t.real()) + "," +
                                   std::to_string(t.imag()));
  }
  return o;
}

Outcome twist_consistency() {
  Outcome o;
  o.require(torus::twist_consistency_check(), "check returned false");
  return o;
}

Outcome decision_tables() {
  Outcome o;
  for (const auto& c : st::moduli_matrix()) {
    const auto got = qd_components(c.genus, c.orders);
    std::string orders;
    for (int k : c.orders) orders += std::to_string(k) + " ";
    o.require(got == ComponentCount::exactly(c.expected, "Thm 2.2"),
              "g=" + std::to_string(c.genus) + " (" + orders + ") gave " + got.to_string());
  }
  o.require(st::moduli_matrix().size() >= 30, "matrix has fewer than 30 cases");
  o.require(q_components_over_teich(2, {1, 1, 1, 1}) == ComponentCount::exactly(1, "Thm 3.1"),
            "(1^4)");
  o.require(q_components_over_teich(2, {2, 2}) == ComponentCount::exactly(15, "Cor 4.6"),
            "(2^2) at g=2");
  // The criterion names (2^4) at g = 2, whose orders sum to 8 rather than
  // 4g - 4 = 4. The library rejects it as an invalid stratum.
  try {
    const auto c = q_components_over_teich(2, {2, 2, 2, 2});
    o.require(c == ComponentCount::exactly(15, "Cor 4.6"), "(2^4) at g=2 gave " + c.to_string());
  } catch (const std::exception& e) {
    o.require(false, std::string("(2^4) at g=2 is not a stratum: ") + e.what());
  }
  o.require(q_components_over_teich(3, {8}) == ComponentCount::at_least(63, "Thm 4.5"), "(8)");
  return o;
}

Outcome property_suites() {
  Outcome o;
  for (const auto& name : st::holomorphic_fixtures()) {
    const auto s = st::load(name);
    const Stratum str = stratum(s);
    int sum = 0;
    for (int k : str.orders) sum += k;
    o.require(sum == 4 * str.genus - 4, "Gauss-Bonnet fails on " + name);
  }
  std::mt19937 rng(99);
  for (const auto& name : st::even_fixtures()) {
    const auto s = st::load(name);
    const auto d = double_cover(s);
    o.require(is_square(s) == !d.connected, "square/cover mismatch on " + name);
    const auto boundaries = vertex_cycles(s);
    for (int t = 0; t < 100; ++t) {
      const Cycle a = st::random_cycle(s, rng), b = st::random_cycle(s, rng);
      o.require(ga(s, a + b) == (ga(s, a) + ga(s, b)) % 2, "linearity on " + name);
      const Cycle bd = vertex_boundary(s, boundaries[t % boundaries.size()]);
      o.require(ga_on_homology(s, a) == ga_on_homology(s, a + bd), "homology on " + name);
      const Cycle c = st::random_simple_cycle(s, rng);
      o.require(lift_components(s, d, c) == 2 - ga(s, c), "lift on " + name);
    }
    if (!is_square(s)) {
      o.require(!parity_vector(s, symplectic_basis(s)).is_zero(), "zero parity on " + name);
    }
  }
  std::mt19937_64 r64(7);
  for (int g = 1; g <= 6; ++g) {
    const std::uint64_t mask = (std::uint64_t{1} << (2 * g)) - 1;
    for (int t = 0; t < 1000; ++t) {
      const ParityVector v(g, r64() & mask);
      std::uint64_t cb = r64() & mask;
      if (cb == 0) cb = 1;
      const TwistGenerator c(ParityVector(g, cb));
      o.require(twist_action(twist_action(v, c), c) == v, "involution g=" + std::to_string(g));
      o.require(twist_action(ParityVector::zero(g), c).is_zero(), "zero g=" + std::to_string(g));
    }
  }
  return o;
}

Outcome cover_bookkeeping() {
  Outcome o;
  for (const auto& name : st::odd_fixtures()) {
    const auto s = st::load(name);
    std::multiset<int> expected;
    for (int k : vertex_orders(s)) {
      if (k % 2 != 0) {
        expected.insert(2 * k + 2);
      } else {
        expected.insert({k, k});
      }
    }
    const auto d = double_cover(s);
    const auto got = vertex_orders(d.cover);
    o.require(std::multiset<int>(got.begin(), got.end()) == expected,
              "ramified orders on " + name);
  }
  for (const auto& name : st::even_fixtures()) {
    const auto s = st::load(name);
    o.require(euler_characteristic(double_cover(s).cover) == 2 * euler_characteristic(s),
              "chi on " + name);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 when no runtime bound applies
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "orbit counts for g = 1..6", 5.0, orbit_counts},
      {2, "torus Ga values at tau = i and 1+i", 10.0, torus_values},
      {3, "three components of Q_1(-2,2)", 30.0, three_components},
      {4, "twist consistency", 0.0, twist_consistency},
      {5, "component decision tables", 0.0, decision_tables},
      {6, "property suites", 0.0, property_suites},
      {7, "double cover order bookkeeping", 0.0, cover_bookkeeping},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.why << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      out.require(false, "took " + std::to_string(secs) + " s");
    }
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " ("
              << static_cast<long>(secs * 1000) << " ms)";
    if (!out.ok) std::cout << ": " << out.why.str();
    std::cout << "\n";
    failed += !out.ok;
  }
  return failed == 0 ? 0 : 1;
}
