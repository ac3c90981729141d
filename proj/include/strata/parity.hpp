#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace strata {

inline constexpr int kMaxPackedGenus = 30;

// Element of (Z/2)^{2g} with coordinates (a_1..a_g, b_1..b_g), packed into one
// word with a_1 as the most significant of the 2g bits. Numeric order on the
// packed word is therefore lexicographic order on the bitstring.
class ParityVector {
 public:
  ParityVector() = default;
  // Throws kInvalidArgument unless 0 <= genus <= kMaxPackedGenus and bits fit.
  ParityVector(int genus, std::uint64_t bits);

  static ParityVector zero(int genus) { return ParityVector(genus, 0); }
  // Unit vector e_j, j in [0, 2g).
  static ParityVector unit(int genus, int j);
  // Accepts "a1..ag b1..bg" with optional whitespace; length must be even.
  static ParityVector parse(std::string_view bits);

  int genus() const { return genus_; }
  int size() const { return 2 * genus_; }
  std::uint64_t bits() const { return bits_; }

  bool get(int j) const { return (bits_ >> (size() - 1 - j)) & 1u; }
  void set(int j, bool value);
  bool is_zero() const { return bits_ == 0; }

  std::string to_string() const;

  friend bool operator==(const ParityVector&, const ParityVector&) = default;
  friend auto operator<=>(const ParityVector&, const ParityVector&) = default;

 private:
  int genus_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace strata
