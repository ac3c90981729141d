#include "strata/twist_orbit.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "strata/error.hpp"

namespace strata {

namespace {

void require_same_genus(const ParityVector& x, const ParityVector& y) {
  if (x.genus() != y.genus()) {
    throw Error(ErrorCode::kLengthMismatch,
                "vectors of length " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  }
}

// Exchanges the a-half and b-half of the packed word.
std::uint64_t swap_halves(std::uint64_t bits, int g) {
  const std::uint64_t low = (std::uint64_t{1} << g) - 1;
  return (bits >> g) | ((bits & low) << g);
}

}  // namespace

TwistGenerator::TwistGenerator(ParityVector cls) : cls_(cls) {
  if (cls_.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "twist curve class must be nonzero");
  }
}

int sympl(const ParityVector& x, const ParityVector& y) {
  require_same_genus(x, y);
  return std::popcount(x.bits() & swap_halves(y.bits(), y.genus())) & 1;
}

int ga_of_class(const ParityVector& v, const ParityVector& c) {
  require_same_genus(v, c);
  return std::popcount(v.bits() & c.bits()) & 1;
}

ParityVector twist_action(const ParityVector& v, const TwistGenerator& c) {
  const ParityVector& cls = c.cls();
  if (ga_of_class(v, cls) == 0) return v;
  // <c, e_j> is coordinate j of c with its halves swapped.
  return ParityVector(v.genus(), v.bits() ^ swap_halves(cls.bits(), cls.genus()));
}

std::vector<TwistGenerator> paper_generators(int genus) {
  if (genus < 1) {
    throw Error(ErrorCode::kInvalidArgument, "generators need genus >= 1");
  }
  std::vector<TwistGenerator> gens;
  for (int j = 0; j < 2 * genus; ++j) gens.emplace_back(ParityVector::unit(genus, j));
  for (int i = 0; i + 1 < genus; ++i) {
    ParityVector c = ParityVector::unit(genus, i);
    c.set(i + 1, true);
    gens.emplace_back(c);
  }
  return gens;
}

std::vector<ParityVector> orbit(const ParityVector& seed,
                                const std::vector<TwistGenerator>& gens) {
  if (seed.is_zero()) {
    throw Error(ErrorCode::kDegenerateSeed,
                "zero parity vector is fixed by every twist");
  }
  const int g = seed.genus();
  if (g > kMaxOrbitGenus) {
    throw Error(ErrorCode::kInvalidArgument,
                "orbit enumeration limited to genus <= " + std::to_string(kMaxOrbitGenus));
  }
  for (const auto& c : gens) require_same_genus(seed, c.cls());

  std::vector<bool> visited(std::size_t{1} << (2 * g), false);
  std::vector<ParityVector> out{seed};
  std::vector<ParityVector> frontier{seed};
  visited[seed.bits()] = true;
  while (!frontier.empty()) {
    std::vector<ParityVector> next;
    for (const ParityVector& v : frontier) {
      for (const auto& c : gens) {
        const ParityVector w = twist_action(v, c);
        if (visited[w.bits()]) continue;
        visited[w.bits()] = true;
        next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ComponentCount::to_string() const {
  switch (kind) {
    case CountKind::kExactly: return "Exactly(" + std::to_string(n) + ")";
    case CountKind::kAtLeast: return "AtLeast(" + std::to_string(n) + ")";
    case CountKind::kUnknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace strata
