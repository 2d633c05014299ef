#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace colgraph {

using ValueCode = std::uint32_t;

/// Sorted, duplicate-free value dictionary. Codes are dense indices 0..size-1
/// in lexicographic order of the values.
class Dictionary {
 public:
  Dictionary() = default;

  /// Builds from arbitrary values; duplicates are collapsed.
  static Dictionary from_values(std::vector<std::string> values);

  std::optional<ValueCode> encode(std::string_view value) const;
  const std::string& decode(ValueCode code) const;

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const std::vector<std::string>& values() const noexcept { return values_; }

 private:
  std::vector<std::string> values_;
};

}  // namespace colgraph
