#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualbraid {

/// Hash for small integer vectors, used to intern group elements and words.
struct VecHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (const T& x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Fixed-width bit row over element indices; supports the subset and
/// intersection queries the lattice code needs.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int size() const { return n_; }

  BitRow& operator&=(const BitRow& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  BitRow& operator|=(const BitRow& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  friend BitRow operator&(BitRow a, const BitRow& b) { return a &= b; }

  bool subset_of(const BitRow& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        int b = __builtin_ctzll(x);
        f(static_cast<int>(k * 64 + b));
        x &= x - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Invariant falsification: the paper guarantees the condition, so a failure
/// must abort rather than continue with wrong data.
inline void verify_or_abort(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error("falsified invariant: " + msg);
}

}  // namespace dualbraid
