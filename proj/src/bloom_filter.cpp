#include "colgraph/bloom_filter.hpp"

#include <algorithm>
#include <cmath>

#include "colgraph/error.hpp"

namespace colgraph {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Maps a 64-bit hash onto [0, n) without a division.
std::uint64_t reduce(std::uint64_t h, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(h) * n) >> 64);
}

}  // namespace

BloomFilter::BloomFilter(std::size_t bit_count, unsigned hash_count)
    : bit_count_(std::max<std::size_t>(bit_count, 1)),
      hash_count_(std::max(hash_count, 1U)),
      bits_((bit_count_ + 63) / 64, 0) {}

BloomFilter BloomFilter::for_capacity(std::size_t distinct, double fpr) {
  if (!(fpr > 0.0 && fpr < 1.0)) throw Error("false positive rate must be in (0, 1)");
  if (distinct == 0) return BloomFilter(1, 1);
  const double ln2 = std::log(2.0);
  const double n = static_cast<double>(distinct);
  const auto m = static_cast<std::size_t>(std::ceil(-n * std::log(fpr) / (ln2 * ln2)));
  const auto k = static_cast<unsigned>(std::lround(static_cast<double>(m) / n * ln2));
  return BloomFilter(m, k);
}

// Each probe position is an independent splitmix64 output. Plain double
// hashing (h1 + i*h2 mod m) degenerates for the tiny filters of fragments that
// hold only a few distinct keys.
void BloomFilter::insert(VertexCode v) noexcept {
  std::uint64_t state = std::uint64_t{v} << 32;
  for (unsigned i = 0; i < hash_count_; ++i) {
    const std::uint64_t b = reduce(mix64(state), bit_count_);
    state += 0x9e3779b97f4a7c15ULL;
    bits_[b >> 6] |= std::uint64_t{1} << (b & 63);
  }
}

bool BloomFilter::might_contain(VertexCode v) const noexcept {
  std::uint64_t state = std::uint64_t{v} << 32;
  for (unsigned i = 0; i < hash_count_; ++i) {
    const std::uint64_t b = reduce(mix64(state), bit_count_);
    state += 0x9e3779b97f4a7c15ULL;
    if (!((bits_[b >> 6] >> (b & 63)) & 1U)) return false;
  }
  return true;
}

}  // namespace colgraph
