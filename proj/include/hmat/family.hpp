#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "hmat/ground.hpp"

namespace hmat {

// A deduplicated set family over a shared ground set.
// Members are kept strictly increasing in integer value; this is the canonical
// form used for equality, serialization and witness tie-breaking.
class SetFamily {
 public:
  SetFamily(GroundSet ground, std::vector<subset_t> members)
      : ground_(std::move(ground)), members_(std::move(members)) {
    for (subset_t m : members_)
      if (m > ground_.full())
        fail(ErrorKind::out_of_range,
             "subset code " + std::to_string(m) + " exceeds the ground set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const GroundSet& ground() const { return ground_; }
  std::span<const subset_t> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(subset_t s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
  }

  bool operator==(const SetFamily& other) const {
    return ground_ == other.ground_ && members_ == other.members_;
  }

  std::string format() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i > 0) out += ", ";
      out += ground_.format_subset(members_[i]);
    }
    out += "}";
    return out;
  }

 private:
  GroundSet ground_;
  std::vector<subset_t> members_;
};

struct ConstructibleCheck {
  bool ok = false;
  bool empty_family = false;  // no members at all
  subset_t violator = 0;      // nonempty member whose extreme-point set is empty
};

struct SimplicialCheck {
  bool ok = false;
  subset_t member = 0;  // witness I
  int element = -1;     // e in I with I \ {e} outside the family
};

// { e in I | I \ {e} in family }; I must be a member.
subset_t extreme_points(const SetFamily& family, subset_t member);

// { e in E \ I | I + {e} in family }; I must be a member.
subset_t co_extreme_points(const SetFamily& family, subset_t member);

// Members with no proper superset in the family.
SetFamily maximal_members(const SetFamily& family);

// Members with an empty co-extreme-point set. Always a superset of
// maximal_members.
SetFamily bases(const SetFamily& family);

// Every nonempty member has a nonempty extreme-point set. A passing family
// always contains the empty set.
ConstructibleCheck is_constructible(const SetFamily& family);

// { I in family | I within `within` }.
SetFamily restriction(const SetFamily& family, subset_t within);

// True iff the family is downward closed, equivalently extreme_points(I) = I
// for every member.
SimplicialCheck is_simplicial(const SetFamily& family);

// { X | X within some member }. Preserves the maximal members.
SetFamily downward_closure(const SetFamily& family);

}  // namespace hmat
