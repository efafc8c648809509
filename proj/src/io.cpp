#include "hmat/io.hpp"

#include <algorithm>
#include <set>

namespace hmat {

namespace {

const Json& expect(const Json& node, const char* key, const std::string& where) {
  auto it = node.find(key);
  if (it == node.end())
    fail(ErrorKind::parse_error, where + ": missing field '" + key + "'");
  return *it;
}

void expect_kind(const Json& node, Json::value_t kind, const std::string& where) {
  if (node.type() != kind) fail(ErrorKind::parse_error, where + ": unexpected type");
}

}  // namespace

subset_t subset_from_labels(const GroundSet& ground, const Json& labels) {
  expect_kind(labels, Json::value_t::array, "subset");
  subset_t out = 0;
  for (const Json& l : labels) {
    expect_kind(l, Json::value_t::string, "subset element");
    auto idx = ground.index_of(l.get<std::string>());
    if (!idx)
      fail(ErrorKind::parse_error,
           "label '" + l.get<std::string>() + "' is not in the ground set");
    if (out & element_bit(*idx))
      fail(ErrorKind::parse_error,
           "label '" + l.get<std::string>() + "' repeated inside one subset");
    out |= element_bit(*idx);
  }
  return out;
}

Json labels_from_subset(const GroundSet& ground, subset_t s) {
  Json out = Json::array();
  for_each_element(s, [&](int e) { out.push_back(ground.label(e)); });
  return out;
}

Json family_to_json(const SetFamily& family) {
  Json out = Json::array();
  for (subset_t m : family.members())
    out.push_back(labels_from_subset(family.ground(), m));
  return out;
}

namespace {

SetFamily family_from_json(const GroundSet& ground, const Json& node,
                           const std::string& where) {
  expect_kind(node, Json::value_t::array, where);
  std::vector<subset_t> members;
  for (const Json& subset : node) members.push_back(subset_from_labels(ground, subset));
  if (members.size() !=
      std::set<subset_t>(members.begin(), members.end()).size())
    fail(ErrorKind::parse_error, where + ": duplicate subset");
  return SetFamily(ground, std::move(members));
}

RankTable rank_table_from_json(const GroundSet& ground, const Json& node,
                               const std::string& where) {
  expect_kind(node, Json::value_t::array, where);
  std::vector<std::int32_t> values(ground.subset_count(), -1);
  for (const Json& entry : node) {
    if (!entry.is_array() || entry.size() != 2)
      fail(ErrorKind::parse_error, where + ": entries must be [subset, value] pairs");
    subset_t s = subset_from_labels(ground, entry[0]);
    if (!entry[1].is_number_integer() || entry[1].get<std::int64_t>() < 0)
      fail(ErrorKind::parse_error, where + ": rank values must be nonnegative integers");
    if (values[s] >= 0)
      fail(ErrorKind::parse_error,
           where + ": subset " + ground.format_subset(s) + " listed twice");
    values[s] = static_cast<std::int32_t>(entry[1].get<std::int64_t>());
  }
  for (std::size_t s = 0; s < values.size(); ++s)
    if (values[s] < 0)
      fail(ErrorKind::parse_error,
           where + ": missing entry for " +
               ground.format_subset(static_cast<subset_t>(s)));
  return RankTable(ground, std::move(values));
}

InstanceDocument::FunctionEntry function_from_json(const InstanceDocument& doc,
                                                   const Json& node,
                                                   const std::string& where) {
  expect_kind(node, Json::value_t::object, where);
  const std::string domain_name =
      expect(node, "domain", where).get<std::string>();
  auto fam = doc.families.find(domain_name);
  if (fam == doc.families.end())
    fail(ErrorKind::unresolved_name,
         where + ": domain family '" + domain_name + "' not found");
  LatticeFamily domain(fam->second);

  const Json& entries = expect(node, "values", where);
  expect_kind(entries, Json::value_t::array, where + ".values");
  std::map<subset_t, Rational> by_subset;
  for (const Json& entry : entries) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_string())
      fail(ErrorKind::parse_error,
           where + ": entries must be [subset, rational-string] pairs");
    subset_t s = subset_from_labels(doc.ground, entry[0]);
    if (!domain.family().contains(s))
      fail(ErrorKind::parse_error, where + ": " + doc.ground.format_subset(s) +
                                       " is not in the declared domain");
    if (!by_subset.emplace(s, parse_rational(entry[1].get<std::string>())).second)
      fail(ErrorKind::parse_error,
           where + ": subset " + doc.ground.format_subset(s) + " valued twice");
  }
  std::vector<Rational> values;
  for (subset_t m : domain.members()) {
    auto it = by_subset.find(m);
    if (it == by_subset.end())
      fail(ErrorKind::parse_error,
           where + ": missing value for " + doc.ground.format_subset(m));
    values.push_back(it->second);
  }
  return {domain_name, ValuedSetFunction(std::move(domain), std::move(values))};
}

InstanceDocument::PosetEntry poset_from_json(const Json& node, const std::string& where) {
  expect_kind(node, Json::value_t::object, where);
  const Json& elements = expect(node, "elements", where);
  expect_kind(elements, Json::value_t::array, where + ".elements");
  std::vector<std::string> names;
  for (const Json& e : elements) {
    expect_kind(e, Json::value_t::string, where + " element");
    names.push_back(e.get<std::string>());
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    fail(ErrorKind::parse_error, where + ": duplicate element name");

  auto index_of = [&](const std::string& name) -> int {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      fail(ErrorKind::parse_error, where + ": unknown element '" + name + "'");
    return static_cast<int>(it - names.begin());
  };

  std::vector<std::pair<int, int>> pairs;
  const Json& leq = expect(node, "leq", where);
  expect_kind(leq, Json::value_t::array, where + ".leq");
  for (const Json& pair : leq) {
    if (!pair.is_array() || pair.size() != 2)
      fail(ErrorKind::parse_error, where + ".leq: entries must be [lower, upper]");
    pairs.emplace_back(index_of(pair[0].get<std::string>()),
                       index_of(pair[1].get<std::string>()));
  }

  InstanceDocument::PosetEntry entry{
      FinitePoset::from_relation(names, pairs, /*transitive_close=*/true), {}};

  if (auto subsets = node.find("subsets"); subsets != node.end()) {
    expect_kind(*subsets, Json::value_t::object, where + ".subsets");
    for (const auto& [name, list] : subsets->items()) {
      expect_kind(list, Json::value_t::array, where + ".subsets." + name);
      std::vector<int> members;
      for (const Json& e : list) members.push_back(index_of(e.get<std::string>()));
      entry.subsets.emplace(name, PosetSubset(entry.poset, std::move(members)));
    }
  }
  return entry;
}

RationalVector vector_from_json(const GroundSet& ground, const Json& node,
                                const std::string& where) {
  expect_kind(node, Json::value_t::object, where);
  std::vector<Rational> coords(ground.size(), Rational(0));
  for (const auto& [label, value] : node.items()) {
    auto idx = ground.index_of(label);
    if (!idx)
      fail(ErrorKind::parse_error,
           where + ": label '" + label + "' is not in the ground set");
    if (!value.is_string())
      fail(ErrorKind::parse_error, where + ": coordinates must be rational strings");
    coords[*idx] = parse_rational(value.get<std::string>());
  }
  return RationalVector(ground, std::move(coords));
}

}  // namespace

InstanceDocument document_from_json(const Json& doc, std::optional<int> max_ground) {
  expect_kind(doc, Json::value_t::object, "document");
  const Json& ground_node = expect(doc, "ground", "document");
  expect_kind(ground_node, Json::value_t::array, "ground");
  std::vector<std::string> labels;
  for (const Json& l : ground_node) {
    expect_kind(l, Json::value_t::string, "ground label");
    labels.push_back(l.get<std::string>());
  }
  if (max_ground && labels.size() > static_cast<std::size_t>(*max_ground))
    fail(ErrorKind::budget_exceeded,
         "ground set size " + std::to_string(labels.size()) +
             " exceeds the HMAT_MAX_N cap of " + std::to_string(*max_ground));

  InstanceDocument out{GroundSet(std::move(labels))};

  if (auto families = doc.find("families"); families != doc.end()) {
    expect_kind(*families, Json::value_t::object, "families");
    for (const auto& [name, node] : families->items())
      out.families.emplace(name,
                           family_from_json(out.ground, node, "family '" + name + "'"));
  }
  if (auto specs = doc.find("h_specs"); specs != doc.end()) {
    expect_kind(*specs, Json::value_t::object, "h_specs");
    for (const auto& [name, node] : specs->items()) {
      expect_kind(node, Json::value_t::string, "h_spec '" + name + "'");
      const std::string target = node.get<std::string>();
      if (out.families.find(target) == out.families.end())
        fail(ErrorKind::unresolved_name,
             "h_spec '" + name + "' references unknown family '" + target + "'");
      HSpec validate{out.families.at(target)};  // must contain empty and full
      out.h_specs.emplace(name, target);
    }
  }
  if (auto tables = doc.find("rank_tables"); tables != doc.end()) {
    expect_kind(*tables, Json::value_t::object, "rank_tables");
    for (const auto& [name, node] : tables->items())
      out.rank_tables.emplace(
          name, rank_table_from_json(out.ground, node, "rank table '" + name + "'"));
  }
  if (auto functions = doc.find("functions"); functions != doc.end()) {
    expect_kind(*functions, Json::value_t::object, "functions");
    for (const auto& [name, node] : functions->items())
      out.functions.emplace(name,
                            function_from_json(out, node, "function '" + name + "'"));
  }
  if (auto posets = doc.find("posets"); posets != doc.end()) {
    expect_kind(*posets, Json::value_t::object, "posets");
    for (const auto& [name, node] : posets->items())
      out.posets.emplace(name, poset_from_json(node, "poset '" + name + "'"));
  }
  if (auto vectors = doc.find("vectors"); vectors != doc.end()) {
    expect_kind(*vectors, Json::value_t::object, "vectors");
    for (const auto& [name, node] : vectors->items())
      out.vectors.emplace(name,
                          vector_from_json(out.ground, node, "vector '" + name + "'"));
  }
  return out;
}

InstanceDocument parse_document(const std::string& text, std::optional<int> max_ground) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorKind::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(doc, max_ground);
}

Json document_to_json(const InstanceDocument& doc) {
  Json out;
  out["ground"] = doc.ground.labels();

  if (!doc.families.empty()) {
    Json families = Json::object();
    for (const auto& [name, family] : doc.families)
      families[name] = family_to_json(family);
    out["families"] = std::move(families);
  }
  if (!doc.h_specs.empty()) {
    Json specs = Json::object();
    for (const auto& [name, target] : doc.h_specs) specs[name] = target;
    out["h_specs"] = std::move(specs);
  }
  if (!doc.rank_tables.empty()) {
    Json tables = Json::object();
    for (const auto& [name, table] : doc.rank_tables) {
      Json entries = Json::array();
      for (std::size_t s = 0; s < table.ground().subset_count(); ++s)
        entries.push_back(Json::array(
            {labels_from_subset(table.ground(), static_cast<subset_t>(s)),
             table[static_cast<subset_t>(s)]}));
      tables[name] = std::move(entries);
    }
    out["rank_tables"] = std::move(tables);
  }
  if (!doc.functions.empty()) {
    Json functions = Json::object();
    for (const auto& [name, entry] : doc.functions) {
      Json node;
      node["domain"] = entry.domain_name;
      Json values = Json::array();
      for (subset_t m : entry.function.domain().members())
        values.push_back(
            Json::array({labels_from_subset(doc.ground, m),
                         format_rational(entry.function.value(m))}));
      node["values"] = std::move(values);
      functions[name] = std::move(node);
    }
    out["functions"] = std::move(functions);
  }
  if (!doc.posets.empty()) {
    Json posets = Json::object();
    for (const auto& [name, entry] : doc.posets) {
      Json node;
      node["elements"] = entry.poset.names();
      Json leq = Json::array();
      for (int x = 0; x < entry.poset.size(); ++x)
        for (int y = 0; y < entry.poset.size(); ++y)
          if (entry.poset.covers(x, y))
            leq.push_back(Json::array({entry.poset.name(x), entry.poset.name(y)}));
      node["leq"] = std::move(leq);
      if (!entry.subsets.empty()) {
        Json subsets = Json::object();
        for (const auto& [sname, subset] : entry.subsets) {
          Json list = Json::array();
          for (int m : subset.members()) list.push_back(entry.poset.name(m));
          subsets[sname] = std::move(list);
        }
        node["subsets"] = std::move(subsets);
      }
      posets[name] = std::move(node);
    }
    out["posets"] = std::move(posets);
  }
  if (!doc.vectors.empty()) {
    Json vectors = Json::object();
    for (const auto& [name, vec] : doc.vectors) {
      Json node = Json::object();
      for (int e = 0; e < doc.ground.size(); ++e)
        node[doc.ground.label(e)] = format_rational(vec.coord(e));
      vectors[name] = std::move(node);
    }
    out["vectors"] = std::move(vectors);
  }
  return out;
}

namespace {

[[noreturn]] void unresolved(const std::string& kind, const std::string& name) {
  fail(ErrorKind::unresolved_name, "unknown " + kind + " '" + name + "'");
}

}  // namespace

const SetFamily& resolve_family(const InstanceDocument& doc, const std::string& name) {
  auto it = doc.families.find(name);
  if (it == doc.families.end()) unresolved("family", name);
  return it->second;
}

HSpec resolve_h_spec(const InstanceDocument& doc, const std::string& name) {
  auto it = doc.h_specs.find(name);
  if (it == doc.h_specs.end()) unresolved("h_spec", name);
  return HSpec(resolve_family(doc, it->second));
}

const RankTable& resolve_rank_table(const InstanceDocument& doc, const std::string& name) {
  auto it = doc.rank_tables.find(name);
  if (it == doc.rank_tables.end()) unresolved("rank table", name);
  return it->second;
}

const ValuedSetFunction& resolve_function(const InstanceDocument& doc,
                                          const std::string& name) {
  auto it = doc.functions.find(name);
  if (it == doc.functions.end()) unresolved("function", name);
  return it->second.function;
}

const InstanceDocument::PosetEntry& resolve_poset(const InstanceDocument& doc,
                                                  const std::string& name) {
  auto it = doc.posets.find(name);
  if (it == doc.posets.end()) unresolved("poset", name);
  return it->second;
}

const PosetSubset& resolve_poset_subset(const InstanceDocument::PosetEntry& entry,
                                        const std::string& name) {
  auto it = entry.subsets.find(name);
  if (it == entry.subsets.end()) unresolved("poset subset", name);
  return it->second;
}

const RationalVector& resolve_vector(const InstanceDocument& doc,
                                     const std::string& name) {
  auto it = doc.vectors.find(name);
  if (it == doc.vectors.end()) unresolved("vector", name);
  return it->second;
}

}  // namespace hmat
