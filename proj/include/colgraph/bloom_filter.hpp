#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "colgraph/storage.hpp"

namespace colgraph {

/// Bloom filter over vertex codes. Never reports a false negative.
class BloomFilter {
 public:
  BloomFilter() = default;
  BloomFilter(std::size_t bit_count, unsigned hash_count);

  /// Optimal sizing for `distinct` members at false-positive rate `fpr`:
  /// m = ceil(-n ln p / (ln 2)^2), k = round(m/n ln 2).
  static BloomFilter for_capacity(std::size_t distinct, double fpr);

  void insert(VertexCode v) noexcept;
  bool might_contain(VertexCode v) const noexcept;

  std::size_t bit_count() const noexcept { return bit_count_; }
  unsigned hash_count() const noexcept { return hash_count_; }
  /// Storage footprint of the bit array, rounded up to whole bytes.
  std::size_t byte_size() const noexcept { return (bit_count_ + 7) / 8; }

 private:
  std::size_t bit_count_ = 0;
  unsigned hash_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace colgraph
