#include "strata/parity.hpp"

#include <cctype>

#include "strata/error.hpp"

namespace strata {

ParityVector::ParityVector(int genus, std::uint64_t bits) : genus_(genus), bits_(bits) {
  if (genus < 0 || genus > kMaxPackedGenus) {
    throw Error(ErrorCode::kInvalidArgument,
                "genus " + std::to_string(genus) + " outside [0, " +
                    std::to_string(kMaxPackedGenus) + "]");
  }
  if (genus < 32 && (bits >> (2 * genus)) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "parity bits exceed 2g coordinates");
  }
}

ParityVector ParityVector::unit(int genus, int j) {
  ParityVector v = zero(genus);
  v.set(j, true);
  return v;
}

ParityVector ParityVector::parse(std::string_view text) {
  std::uint64_t bits = 0;
  int n = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::kInvalidArgument,
                  "parity bitstring may contain only 0 and 1, got '" + std::string(text) + "'");
    }
    if (n == 2 * kMaxPackedGenus) {
      throw Error(ErrorCode::kInvalidArgument, "parity bitstring too long");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(ch == '1');
    ++n;
  }
  if (n == 0 || n % 2 != 0) {
    throw Error(ErrorCode::kLengthMismatch,
                "parity bitstring needs 2g > 0 digits, got " + std::to_string(n));
  }
  return ParityVector(n / 2, bits);
}

void ParityVector::set(int j, bool value) {
  if (j < 0 || j >= size()) {
    throw Error(ErrorCode::kLengthMismatch, "coordinate " + std::to_string(j) + " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << (size() - 1 - j);
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

std::string ParityVector::to_string() const {
  std::string out(size(), '0');
  for (int j = 0; j < size(); ++j) {
    if (get(j)) out[j] = '1';
  }
  return out;
}

}  // namespace strata
