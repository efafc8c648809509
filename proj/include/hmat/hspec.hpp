#pragma once

#include "hmat/family.hpp"

namespace hmat {

// A constraint family H: any set family containing both the empty set and E.
class HSpec {
 public:
  explicit HSpec(SetFamily family) : family_(std::move(family)) {
    if (!family_.contains(0))
      fail(ErrorKind::invalid_h_spec, "H must contain the empty set");
    if (!family_.contains(family_.ground().full()))
      fail(ErrorKind::invalid_h_spec, "H must contain the full ground set");
  }

  const SetFamily& family() const { return family_; }
  const GroundSet& ground() const { return family_.ground(); }
  std::span<const subset_t> members() const { return family_.members(); }

  bool operator==(const HSpec& other) const { return family_ == other.family_; }

 private:
  SetFamily family_;
};

// The constraint families on a ground set are indexed by the subsets they
// contain besides the mandatory empty and full sets: bit c-1 of the mask
// selects the subset with code c. Mask order is the canonical H-spec order.
inline HSpec h_spec_from_middle_mask(const GroundSet& ground, std::uint64_t mask) {
  std::vector<subset_t> members{0, ground.full()};
  for (subset_t c = 1; c < ground.full(); ++c)
    if (mask & (std::uint64_t{1} << (c - 1))) members.push_back(c);
  return HSpec(SetFamily(ground, std::move(members)));
}

}  // namespace hmat
