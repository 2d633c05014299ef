#pragma once

#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace colgraph {

/// Fixed-length bitset over record positions.
///
/// The `atomic_*` accessors allow concurrent readers and writers that touch
/// disjoint bits of a shared word, which happens when scan partitions do not
/// start on a word boundary.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size, bool value = false)
      : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= bit(i); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~bit(i); }

  bool atomic_test(std::size_t i) const noexcept {
    std::atomic_ref<std::uint64_t> w(const_cast<std::uint64_t&>(words_[i >> 6]));
    return (w.load(std::memory_order_relaxed) >> (i & 63)) & 1U;
  }
  void atomic_reset(std::size_t i) noexcept {
    std::atomic_ref<std::uint64_t> w(words_[i >> 6]);
    w.fetch_and(~bit(i), std::memory_order_relaxed);
  }
  void atomic_clear_word(std::size_t word, std::uint64_t mask) noexcept {
    std::atomic_ref<std::uint64_t> w(words_[word]);
    w.fetch_and(~mask, std::memory_order_relaxed);
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  void set_range(std::size_t begin, std::size_t end) noexcept {
    for (std::size_t i = begin; i < end; ++i) set(i);
  }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  Bitset& flip() noexcept {
    for (auto& w : words_) w = ~w;
    trim();
    return *this;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  static std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << (i & 63); }
  void trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= bit(size_) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Per-query validity bits over edge positions: 1 = edge satisfies the
/// predicate and has not been traversed yet.
using ActiveEdgeList = Bitset;

}  // namespace colgraph
