#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

namespace dcut {

// Fixed-size dynamic bitset used for vertex sets and adjacency rows.
// Word-parallel set operations keep neighbourhood queries O(n/64).
class Bitset {
public:
  Bitset() : n_(0) {}
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe_size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() {
    for (auto& w : w_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Lowest set bit, or -1 when empty.
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64) + std::countr_zero(w_[k]);
    return -1;
  }
  // Lowest set bit > i, or -1.
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    std::size_t k = std::size_t(i) >> 6;
    std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(k * 64) + std::countr_zero(w);
      if (++k == w_.size()) return -1;
      w = w_[k];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  // Set difference: remove o's members.
  Bitset& operator-=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  // All bits of the universe flipped.
  Bitset complement() const {
    Bitset r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  int intersection_count(const Bitset& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }
  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
    return v;
  }
  static Bitset of(int n, const std::vector<int>& members) {
    Bitset b(n);
    for (int i : members) b.set(i);
    return b;
  }

private:
  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    if (n_ == 0 && !w_.empty()) w_.back() = 0;
  }

  int n_;
  std::vector<std::uint64_t> w_;
};

// Iterate members: for (int v : bits(b)) ...
struct BitsRange {
  const Bitset* b;
  struct It {
    const Bitset* b;
    int v;
    int operator*() const { return v; }
    It& operator++() {
      v = b->next(v);
      return *this;
    }
    bool operator!=(const It& o) const { return v != o.v; }
  };
  It begin() const { return {b, b->first()}; }
  It end() const { return {b, -1}; }
};
inline BitsRange bits(const Bitset& b) { return {&b}; }

// Rvalue overload: moves the temporary into the range object, which range-for
// keeps alive for the whole loop. Without it, bits(a & b) would iterate a
// dead temporary.
struct OwnedBitsRange {
  Bitset b;
  BitsRange::It begin() const { return {&b, b.first()}; }
  BitsRange::It end() const { return {&b, -1}; }
};
inline OwnedBitsRange bits(Bitset&& b) { return {std::move(b)}; }

}  // namespace dcut
