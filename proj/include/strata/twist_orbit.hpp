#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/parity.hpp"

namespace strata {

// Homology class of a Dehn-twist curve in the standard symplectic basis.
class TwistGenerator {
 public:
  // Throws kInvalidArgument for the zero class.
  explicit TwistGenerator(ParityVector cls);
  const ParityVector& cls() const { return cls_; }
  friend bool operator==(const TwistGenerator&, const TwistGenerator&) = default;

 private:
  ParityVector cls_;
};

// Standard mod-2 symplectic form: sum_i x_i y_{g+i} + x_{g+i} y_i.
int sympl(const ParityVector& x, const ParityVector& y);

// Value on class c of the functional with basis values v: c . v mod 2.
int ga_of_class(const ParityVector& v, const ParityVector& c);

// Parity vector after twisting along c: v'_j = v_j + <c, e_j> ga(c).
ParityVector twist_action(const ParityVector& v, const TwistGenerator& c);

// alpha_1..alpha_g, beta_1..beta_g, then gamma_i = alpha_i + alpha_{i+1}.
std::vector<TwistGenerator> paper_generators(int genus);

// Largest genus for which orbit() will enumerate (2^{2g} visited bits).
inline constexpr int kMaxOrbitGenus = 13;

// Closure of {seed} under the twists, sorted ascending (lexicographic on
// bitstrings). Throws kDegenerateSeed for the zero vector.
std::vector<ParityVector> orbit(const ParityVector& seed,
                                const std::vector<TwistGenerator>& gens);

enum class CountKind { kExactly, kAtLeast, kUnknown };

struct ComponentCount {
  CountKind kind = CountKind::kUnknown;
  long long n = 0;        // meaningful unless kUnknown
  std::string theorem;    // citation tag of the result used

  static ComponentCount exactly(long long n, std::string tag) {
    return {CountKind::kExactly, n, std::move(tag)};
  }
  static ComponentCount at_least(long long n, std::string tag) {
    return {CountKind::kAtLeast, n, std::move(tag)};
  }
  static ComponentCount unknown() { return {CountKind::kUnknown, 0, "none"}; }

  std::string to_string() const;
  friend bool operator==(const ComponentCount&, const ComponentCount&) = default;
};

// Components of the stratum over moduli space. Orders may include -1
// (simple poles) and 0 (marked points); they must sum to 4g - 4.
// Emptiness of the stratum is not checked.
ComponentCount qd_components(int genus, std::vector<int> orders);

// Components of the stratum over Teichmueller space. Requires g >= 2 and all
// orders >= 1 summing to 4g - 4.
ComponentCount q_components_over_teich(int genus, std::vector<int> orders);

}  // namespace strata
