#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hmat/bits.hpp"
#include "hmat/errors.hpp"

namespace hmat {

// The finite universe E. Element i corresponds to bit i of a subset_t.
class GroundSet {
 public:
  static constexpr int max_size = 24;

  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty() || labels_.size() > static_cast<std::size_t>(max_size))
      fail(ErrorKind::out_of_range,
           "ground set must have between 1 and " + std::to_string(max_size) +
               " elements, got " + std::to_string(labels_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) fail(ErrorKind::invalid_value, "empty element label");
      if (!seen.insert(l).second)
        fail(ErrorKind::invalid_value, "duplicate element label '" + l + "'");
    }
  }

  // Elements labeled "1".."n".
  explicit GroundSet(int n) : GroundSet(numbered_labels(n)) {}

  int size() const { return static_cast<int>(labels_.size()); }
  subset_t full() const { return (subset_t{1} << size()) - 1; }
  std::size_t subset_count() const { return std::size_t{1} << size(); }

  const std::string& label(int element) const { return labels_.at(element); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> index_of(std::string_view label) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  std::string format_subset(subset_t s) const {
    std::string out = "{";
    bool first = true;
    for_each_element(s, [&](int e) {
      if (!first) out += ",";
      out += label(e);
      first = false;
    });
    out += "}";
    return out;
  }

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }
  bool operator!=(const GroundSet& other) const { return !(*this == other); }

 private:
  static std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
  }

  std::vector<std::string> labels_;
};

inline void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (a != b) fail(ErrorKind::ground_mismatch, "operands use different ground sets");
}

}  // namespace hmat
