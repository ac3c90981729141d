#include <algorithm>
#include <numeric>

#include "strata/error.hpp"
#include "strata/twist_orbit.hpp"

namespace strata {

namespace {

// Citation tags reported alongside each count.
constexpr const char* kTagModuli = "Thm 2.2";
constexpr const char* kTagSimpleZeros = "Thm 3.1";
constexpr const char* kTagEvenLowerBound = "Thm 4.5";
constexpr const char* kTagDoubleZeros = "Cor 4.6";

void require_sum(int genus, const std::vector<int>& orders) {
  const int sum = std::accumulate(orders.begin(), orders.end(), 0);
  if (sum != 4 * genus - 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "orders sum to " + std::to_string(sum) + " but 4g-4 = " +
                    std::to_string(4 * genus - 4));
  }
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// The three two-component families over moduli space, for g >= 3.
bool in_hyperelliptic_family(int g, const std::vector<int>& orders) {
  const std::vector<int> target = sorted(orders);
  for (int k = 0; g - k >= 1; ++k) {
    const int m = g - k;
    if (m >= 2 && target == sorted({4 * m - 6, 4 * k + 2})) return true;
    if (target == sorted({2 * m - 3, 2 * m - 3, 4 * k + 2})) return true;
    if (m >= 2 && target == sorted({2 * m - 3, 2 * m - 3, 2 * k + 1, 2 * k + 1})) return true;
  }
  return false;
}

}  // namespace

ComponentCount qd_components(int genus, std::vector<int> orders) {
  if (genus < 0) throw Error(ErrorCode::kInvalidArgument, "negative genus");
  for (int k : orders) {
    if (k < -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "order " + std::to_string(k) + " below -1 is outside this classification");
    }
  }
  require_sum(genus, orders);

  if (genus == 2) {
    const auto target = sorted(orders);
    if (target == sorted({3, 3, -1, -1}) || target == sorted({6, -1, -1})) {
      return ComponentCount::exactly(2, kTagModuli);
    }
  }
  if (genus >= 3 && in_hyperelliptic_family(genus, orders)) {
    return ComponentCount::exactly(2, kTagModuli);
  }
  return ComponentCount::exactly(1, kTagModuli);
}

ComponentCount q_components_over_teich(int genus, std::vector<int> orders) {
  if (genus <= 1) {
    throw Error(ErrorCode::kInvalidArgument, "Teichmueller-space counts need genus >= 2");
  }
  if (genus > kMaxPackedGenus) {
    throw Error(ErrorCode::kInvalidArgument, "genus too large");
  }
  for (int k : orders) {
    if (k < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "orders must be >= 1 for holomorphic strata, got " + std::to_string(k));
    }
  }
  require_sum(genus, orders);

  const auto count = [&](int k) { return std::count(orders.begin(), orders.end(), k); };
  const bool all_even =
      std::all_of(orders.begin(), orders.end(), [](int k) { return k % 2 == 0; });
  const long long parities = (1LL << (2 * genus)) - 1;

  if (count(1) >= genus) return ComponentCount::exactly(1, kTagSimpleZeros);
  if (all_even && count(2) >= genus) return ComponentCount::exactly(parities, kTagDoubleZeros);
  if (all_even) return ComponentCount::at_least(parities, kTagEvenLowerBound);
  return ComponentCount::unknown();
}

}  // namespace strata
