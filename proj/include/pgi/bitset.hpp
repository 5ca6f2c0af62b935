#ifndef PGI_BITSET_HPP
#define PGI_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pgi {

// Fixed-size bitset sized at runtime; element sets over a group of known order.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size_bits() const { return nbits_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

  // Total order used everywhere a deterministic tie-break is needed: the set
  // whose lowest differing element is present comes first.
  bool lex_less(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t d = w_[i] ^ o.w_[i];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return w_[i] & low;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

private:
  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace pgi

#endif
