#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace strata {

// Dense vector over Z/2, one bit per coordinate.
class Z2Vector {
 public:
  Z2Vector() = default;
  explicit Z2Vector(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= bit;
    } else {
      words_[i / 64] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  Z2Vector& operator^=(const Z2Vector& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend Z2Vector operator^(Z2Vector a, const Z2Vector& b) { return a ^= b; }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }
  bool none() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // Parity of the coordinatewise product.
  bool dot(const Z2Vector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
  }

  // Index of the lowest set coordinate, or size() when zero.
  std::size_t lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    }
    return size_;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) out.push_back(i);
    }
    return out;
  }

  friend bool operator==(const Z2Vector&, const Z2Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Incremental row-echelon span over Z/2, keyed by lowest set coordinate.
class Z2Span {
 public:
  // Reduces v against the current rows. The result is zero on every pivot.
  Z2Vector reduce(Z2Vector v) const {
    for (const auto& [p, row] : rows_) {
      if (v.get(p)) v ^= row;
    }
    return v;
  }

  // Adds v to the span; returns false when v was already in it.
  bool insert(const Z2Vector& v) {
    Z2Vector r = reduce(v);
    if (r.none()) return false;
    // Rows stay zero on each other's pivots, so one pass in reduce() suffices.
    const std::size_t pivot = r.lowest();
    for (auto& [p, row] : rows_) {
      if (row.get(pivot)) row ^= r;
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  bool contains(const Z2Vector& v) const { return reduce(v).none(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, Z2Vector> rows_;
};

}  // namespace strata
