#include "colgraph/dictionary.hpp"

#include <algorithm>
#include <stdexcept>

namespace colgraph {

Dictionary Dictionary::from_values(std::vector<std::string> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Dictionary d;
  d.values_ = std::move(values);
  return d;
}

std::optional<ValueCode> Dictionary::encode(std::string_view value) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) return std::nullopt;
  return static_cast<ValueCode>(it - values_.begin());
}

const std::string& Dictionary::decode(ValueCode code) const {
  if (code >= values_.size()) {
    throw std::logic_error("dictionary code " + std::to_string(code) + " out of range");
  }
  return values_[code];
}

}  // namespace colgraph
