#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hmat/family.hpp"
#include "hmat/hspec.hpp"

namespace hmat {

// A total map from all 2^n subsets to nonnegative integers, indexed by
// subset code.
class RankTable {
 public:
  RankTable(GroundSet ground, std::vector<std::int32_t> values)
      : ground_(std::move(ground)), values_(std::move(values)) {
    if (values_.size() != ground_.subset_count())
      fail(ErrorKind::invalid_value,
           "rank table must have one entry per subset (" +
               std::to_string(ground_.subset_count()) + "), got " +
               std::to_string(values_.size()));
    for (std::int32_t v : values_)
      if (v < 0) fail(ErrorKind::invalid_value, "rank values must be nonnegative");
  }

  const GroundSet& ground() const { return ground_; }
  std::int32_t operator[](subset_t s) const { return values_[s]; }
  const std::vector<std::int32_t>& values() const { return values_; }

  bool operator==(const RankTable& other) const {
    return ground_ == other.ground_ && values_ == other.values_;
  }

 private:
  GroundSet ground_;
  std::vector<std::int32_t> values_;
};

struct UnitIncreaseCheck {
  bool ok = false;
  bool normalization_failed = false;  // value at the empty set is nonzero
  subset_t set = 0;                   // witness X
  int element = -1;                   // e outside X breaking the unit step
};

struct ExtensionCheck {
  bool ok = false;
  subset_t set = 0;  // witness X
  subset_t h = 0;    // witness H
};

struct HMatroidReport;  // hmatroid.hpp

// Composite report for the rank-characterization round trip: check the table,
// build the independence family it induces, and confirm what that family
// realizes.
struct CharacterizationRoundtrip {
  UnitIncreaseCheck unit_increasing;
  std::optional<ExtensionCheck> extension;
  std::optional<SetFamily> independence;  // I_rho, when both checks pass
  std::optional<SimplicialCheck> simplicial;
  bool matroid_ok = false;
  std::string matroid_failure;              // rendered first failing axiom, if any
  std::optional<subset_t> rank_mismatch;    // first subset where ranks differ
  bool rank_checked = false;
  bool ok = false;
};

// rho(X) = max |X intersect I| over members I; requires a constructible family.
RankTable rank_from_family(const SetFamily& family);

// rho(empty) = 0 and every single-element step grows by 0 or 1. Equivalent to
// the two-sided unit-increase bound over all nested pairs.
UnitIncreaseCheck is_normalized_unit_increasing(const RankTable& rho);

// Extension property: whenever X within H in h has rho(X) = |X| < rho(H),
// some e in H \ X has rho(X + {e}) = rho(X) + 1. Requires a normalized
// unit-increasing table. The witness is the smallest violating (X, H).
ExtensionCheck satisfies_extension_property(const RankTable& rho, const HSpec& h);

// { X | rho(X) = |X| }. Always simplicial for a normalized unit-increasing
// table.
SetFamily independence_family_of(const RankTable& rho);

CharacterizationRoundtrip characterization_roundtrip(const RankTable& rho,
                                                     const HSpec& h);

}  // namespace hmat
