#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hhs {

// Fixed-size bitset sized at runtime.  Used for halfspaces, hull membership
// and subtree masks, where the ground sets are a few thousand elements.
class Bits {
 public:
  Bits() : n_(0) {}
  explicit Bits(int n, bool value = false)
      : n_(n), w_((n + 63) / 64, value ? ~0ull : 0ull) {
    trim();
  }

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits operator~() const {
    Bits r(*this);
    for (auto& x : r.w_) x = ~x;
    r.trim();
    return r;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

  // Lowest set index, -1 if none.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  void trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (~0ull) >> (64 - n_ % 64);
  }
  int n_;
  std::vector<std::uint64_t> w_;
};

}  // namespace hhs
