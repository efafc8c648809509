#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hmat/hspec.hpp"
#include "hmat/rank.hpp"

namespace hmat {

struct EnumerationBudget {
  int max_n = 3;
  std::uint64_t sample_count = 1000;
  std::uint64_t seed = 1;
};

// A family over n elements encoded as a characteristic mask: bit c selects the
// subset with code c. Ascending mask order is the canonical family order.
SetFamily family_from_mask(const GroundSet& ground, std::uint64_t mask);
std::uint64_t mask_from_family(const SetFamily& family);

// Every nonempty downward-closed family, ascending mask order. n <= 4.
std::vector<SetFamily> all_simplicial_complexes(int n);

// Every constructible family, ascending mask order. n <= 3.
std::vector<SetFamily> all_constructible_families(int n);

// Every family containing the empty and full sets, middle-mask order. n <= 3.
std::vector<HSpec> all_h_specs(int n);

// Every normalized table satisfying the single-element unit-increase
// condition, generated by depth-first extension over subsets in
// (cardinality, code) order. n <= 3.
std::vector<RankTable> all_normalized_ui_tables(int n);

// Random antichain, its downward closure, then random deletions of
// non-maximal members that keep the family constructible.
SetFamily random_constructible_family(const GroundSet& ground, std::mt19937_64& rng);

// Two families built over one shared antichain; both have the same maximal
// members.
std::pair<SetFamily, SetFamily> random_family_pair_with_shared_max(
    const GroundSet& ground, std::mt19937_64& rng);

struct Counterexample {
  std::string predicate;
  std::string summary;
  std::vector<std::pair<std::string, std::string>> details;  // rendered, ordered
};

struct PredicateInfo {
  std::string id;
  std::string anchor;
  bool fixture = false;  // deliberately negated claim; a witness is expected
  std::string description;
};

const std::vector<PredicateInfo>& registered_predicates();
const PredicateInfo& predicate_info(const std::string& id);

// Sweeps the predicate's instance space at budget.max_n and returns the first
// counterexample in canonical order, if any.
std::optional<Counterexample> find_counterexample(const std::string& predicate_id,
                                                  const EnumerationBudget& budget);

}  // namespace hmat
