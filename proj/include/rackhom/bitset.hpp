#ifndef RACKHOM_BITSET_HPP
#define RACKHOM_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace rackhom {

/// Dense bitset over element ids 0..n-1. Element sets of a group
/// (classes, subgroups, centers) are always stored this way; subset and
/// membership tests dominate the enumeration workloads.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe_size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  friend bool operator==(const DynBitset&, const DynBitset&) = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(static_cast<int>(i));
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rackhom

#endif
