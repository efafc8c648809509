#pragma once

#include <map>
#include <optional>
#include <string>

#include "hmat/poset.hpp"
#include "hmat/rank.hpp"
#include "hmat/report.hpp"
#include "hmat/submodular.hpp"

namespace hmat {

// A named bundle of inputs: one ground set, plus families, constraint
// families, rank tables, lattice functions, posets and rational vectors.
// Subsets are written as arrays of element labels; rationals as "p/q" or
// integer strings.
struct InstanceDocument {
  explicit InstanceDocument(GroundSet g) : ground(std::move(g)) {}

  struct FunctionEntry {
    std::string domain_name;
    ValuedSetFunction function;
  };

  struct PosetEntry {
    FinitePoset poset;
    std::map<std::string, PosetSubset> subsets;
  };

  GroundSet ground;
  std::map<std::string, SetFamily> families;
  std::map<std::string, std::string> h_specs;  // name -> family name
  std::map<std::string, RankTable> rank_tables;
  std::map<std::string, FunctionEntry> functions;
  std::map<std::string, PosetEntry> posets;
  std::map<std::string, RationalVector> vectors;
};

// `max_ground` lowers the ground-set cap (HMAT_MAX_N); parse failures name
// the violated rule.
InstanceDocument parse_document(const std::string& text,
                                std::optional<int> max_ground = std::nullopt);
InstanceDocument document_from_json(const Json& doc,
                                    std::optional<int> max_ground = std::nullopt);

// Canonical form: sorted names, members in ascending code order, complete
// tables, poset relations as cover pairs. parse(print(d)) reproduces d.
Json document_to_json(const InstanceDocument& doc);

subset_t subset_from_labels(const GroundSet& ground, const Json& labels);
Json labels_from_subset(const GroundSet& ground, subset_t s);
Json family_to_json(const SetFamily& family);

const SetFamily& resolve_family(const InstanceDocument& doc, const std::string& name);
HSpec resolve_h_spec(const InstanceDocument& doc, const std::string& name);
const RankTable& resolve_rank_table(const InstanceDocument& doc, const std::string& name);
const ValuedSetFunction& resolve_function(const InstanceDocument& doc,
                                          const std::string& name);
const InstanceDocument::PosetEntry& resolve_poset(const InstanceDocument& doc,
                                                  const std::string& name);
const PosetSubset& resolve_poset_subset(const InstanceDocument::PosetEntry& entry,
                                        const std::string& name);
const RationalVector& resolve_vector(const InstanceDocument& doc,
                                     const std::string& name);

}  // namespace hmat
