#include "hmat/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hmat/hmatroid.hpp"
#include "hmat/parallel.hpp"
#include "hmat/poset.hpp"
#include "hmat/submodular.hpp"

namespace hmat {

namespace {

void require_sweep_n(int n, int cap, const std::string& what) {
  if (n < 1 || n > cap)
    fail(ErrorKind::budget_exceeded,
         what + " requires 1 <= n <= " + std::to_string(cap) + ", got " +
             std::to_string(n));
}

bool mask_simplicial(std::uint64_t mask, int n) {
  if (mask == 0) return false;
  const subset_t full = (subset_t{1} << n) - 1;
  for (subset_t x = 0; x <= full; ++x) {
    if (!(mask & (std::uint64_t{1} << x))) continue;
    bool closed = true;
    for_each_element(x, [&](int e) {
      if (!(mask & (std::uint64_t{1} << (x ^ element_bit(e))))) closed = false;
    });
    if (!closed) return false;
  }
  return true;
}

bool mask_constructible(std::uint64_t mask, int n) {
  if (mask == 0) return false;
  const subset_t full = (subset_t{1} << n) - 1;
  for (subset_t x = 1; x <= full; ++x) {
    if (!(mask & (std::uint64_t{1} << x))) continue;
    bool reachable = false;
    for_each_element(x, [&](int e) {
      if (mask & (std::uint64_t{1} << (x ^ element_bit(e)))) reachable = true;
    });
    if (!reachable) return false;
  }
  return true;
}

std::string render_table(const RankTable& rho) {
  std::string out;
  for (std::size_t x = 0; x < rho.ground().subset_count(); ++x) {
    if (x > 0) out += ", ";
    out += "rho(" + rho.ground().format_subset(static_cast<subset_t>(x)) +
           ")=" + std::to_string(rho[static_cast<subset_t>(x)]);
  }
  return out;
}

}  // namespace

SetFamily family_from_mask(const GroundSet& ground, std::uint64_t mask) {
  std::vector<subset_t> members;
  for (std::size_t c = 0; c < ground.subset_count(); ++c)
    if (mask & (std::uint64_t{1} << c)) members.push_back(static_cast<subset_t>(c));
  return SetFamily(ground, std::move(members));
}

std::uint64_t mask_from_family(const SetFamily& family) {
  std::uint64_t mask = 0;
  for (subset_t m : family.members()) mask |= std::uint64_t{1} << m;
  return mask;
}

std::vector<SetFamily> all_simplicial_complexes(int n) {
  require_sweep_n(n, 4, "exhaustive simplicial-complex enumeration");
  GroundSet ground(n);
  const std::uint64_t families = std::uint64_t{1} << ground.subset_count();
  std::vector<SetFamily> out;
  for (std::uint64_t mask = 1; mask < families; ++mask)
    if (mask_simplicial(mask, n)) out.push_back(family_from_mask(ground, mask));
  return out;
}

std::vector<SetFamily> all_constructible_families(int n) {
  require_sweep_n(n, 3, "exhaustive family enumeration");
  GroundSet ground(n);
  const std::uint64_t families = std::uint64_t{1} << ground.subset_count();
  std::vector<SetFamily> out;
  for (std::uint64_t mask = 1; mask < families; ++mask)
    if (mask_constructible(mask, n)) out.push_back(family_from_mask(ground, mask));
  return out;
}

std::vector<HSpec> all_h_specs(int n) {
  require_sweep_n(n, 3, "exhaustive constraint-family enumeration");
  GroundSet ground(n);
  const std::uint64_t specs = std::uint64_t{1} << (ground.subset_count() - 2);
  std::vector<HSpec> out;
  out.reserve(specs);
  for (std::uint64_t mask = 0; mask < specs; ++mask)
    out.push_back(h_spec_from_middle_mask(ground, mask));
  return out;
}

std::vector<RankTable> all_normalized_ui_tables(int n) {
  require_sweep_n(n, 3, "exhaustive rank-table enumeration");
  GroundSet ground(n);
  const std::size_t count = ground.subset_count();

  std::vector<subset_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [](subset_t a, subset_t b) {
    return std::pair(set_size(a), a) < std::pair(set_size(b), b);
  });

  std::vector<std::int32_t> values(count, 0);
  std::vector<RankTable> out;
  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == count) {
      out.emplace_back(ground, values);
      return;
    }
    const subset_t x = order[pos];
    // All one-smaller subsets are already assigned.
    std::int32_t lo = 0, hi = 0;
    bool first = true;
    for_each_element(x, [&](int e) {
      const std::int32_t v = values[x ^ element_bit(e)];
      if (first) {
        lo = v;
        hi = v + 1;
        first = false;
      } else {
        lo = std::max(lo, v);
        hi = std::min(hi, v + 1);
      }
    });
    for (std::int32_t v = lo; v <= hi; ++v) {
      values[x] = v;
      extend(pos + 1);
    }
  };
  extend(1);
  return out;
}

namespace {

std::vector<subset_t> random_antichain(const GroundSet& ground, std::mt19937_64& rng) {
  const std::uint64_t count = ground.subset_count();
  const int k = 1 + static_cast<int>(rng() % 4);
  std::vector<subset_t> cand;
  for (int i = 0; i < k; ++i)
    cand.push_back(static_cast<subset_t>(rng() % count));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<subset_t> maximal;
  for (subset_t a : cand) {
    bool dominated = false;
    for (subset_t b : cand)
      if (proper_subset_of(a, b)) dominated = true;
    if (!dominated) maximal.push_back(a);
  }
  return maximal;
}

std::uint64_t closure_mask(const std::vector<subset_t>& members) {
  std::uint64_t mask = 0;
  for (subset_t m : members) {
    subset_t s = m;
    while (true) {
      mask |= std::uint64_t{1} << s;
      if (s == 0) break;
      s = (s - 1) & m;
    }
  }
  return mask;
}

std::uint64_t prune_family_mask(std::uint64_t mask, const std::vector<subset_t>& keep,
                                int n, std::mt19937_64& rng) {
  std::vector<subset_t> candidates;
  const subset_t full = (subset_t{1} << n) - 1;
  for (subset_t c = 1; c <= full; ++c) {
    if (!(mask & (std::uint64_t{1} << c))) continue;
    if (std::find(keep.begin(), keep.end(), c) == keep.end()) candidates.push_back(c);
  }
  for (std::size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1], candidates[rng() % i]);
  for (subset_t c : candidates) {
    if (rng() % 2 == 0) continue;
    const std::uint64_t attempt = mask & ~(std::uint64_t{1} << c);
    if (mask_constructible(attempt, n)) mask = attempt;
  }
  return mask;
}

}  // namespace

SetFamily random_constructible_family(const GroundSet& ground, std::mt19937_64& rng) {
  auto antichain = random_antichain(ground, rng);
  std::uint64_t mask = prune_family_mask(closure_mask(antichain), antichain,
                                         ground.size(), rng);
  return family_from_mask(ground, mask);
}

std::pair<SetFamily, SetFamily> random_family_pair_with_shared_max(
    const GroundSet& ground, std::mt19937_64& rng) {
  auto antichain = random_antichain(ground, rng);
  const std::uint64_t closed = closure_mask(antichain);
  std::uint64_t m1 = prune_family_mask(closed, antichain, ground.size(), rng);
  std::uint64_t m2 = prune_family_mask(closed, antichain, ground.size(), rng);
  return {family_from_mask(ground, m1), family_from_mask(ground, m2)};
}

namespace {

using Sweep = std::optional<Counterexample> (*)(const EnumerationBudget&);

std::optional<Counterexample> sweep_forward(const EnumerationBudget& budget) {
  require_sweep_n(budget.max_n, 3, "theorem-1.1-forward");
  auto complexes = all_simplicial_complexes(budget.max_n);
  auto specs = all_h_specs(budget.max_n);
  const std::size_t total = complexes.size() * specs.size();
  auto fails = [&](std::size_t idx) {
    const SetFamily& f = complexes[idx / specs.size()];
    const HSpec& h = specs[idx % specs.size()];
    if (!is_h_matroid(f, h).ok) return false;
    RankTable rho = rank_from_family(f);
    if (!is_normalized_unit_increasing(rho).ok) return true;
    return !satisfies_extension_property(rho, h).ok;
  };
  const std::size_t hit = par::first_hit(total, fails);
  if (hit == total) return std::nullopt;

  const SetFamily& f = complexes[hit / specs.size()];
  const HSpec& h = specs[hit % specs.size()];
  RankTable rho = rank_from_family(f);
  Counterexample ce;
  ce.predicate = "theorem-1.1-forward";
  ce.summary = "simplicial H-matroid whose rank table fails (UI) or (E)";
  ce.details.emplace_back("family", f.format());
  ce.details.emplace_back("h", h.family().format());
  ce.details.emplace_back("rank", render_table(rho));
  auto ui = is_normalized_unit_increasing(rho);
  if (!ui.ok) {
    ce.details.emplace_back("failed", "(UI) at " + f.ground().format_subset(ui.set));
  } else {
    auto ext = satisfies_extension_property(rho, h);
    ce.details.emplace_back("failed", "(E) at X=" + f.ground().format_subset(ext.set) +
                                          ", H=" + f.ground().format_subset(ext.h));
  }
  return ce;
}

std::optional<Counterexample> sweep_backward(const EnumerationBudget& budget) {
  require_sweep_n(budget.max_n, 3, "theorem-1.1-backward");
  auto tables = all_normalized_ui_tables(budget.max_n);
  auto specs = all_h_specs(budget.max_n);
  const std::size_t total = tables.size() * specs.size();
  auto fails = [&](std::size_t idx) {
    const RankTable& rho = tables[idx / specs.size()];
    const HSpec& h = specs[idx % specs.size()];
    if (!satisfies_extension_property(rho, h).ok) return false;
    return !characterization_roundtrip(rho, h).ok;
  };
  const std::size_t hit = par::first_hit(total, fails);
  if (hit == total) return std::nullopt;

  const RankTable& rho = tables[hit / specs.size()];
  const HSpec& h = specs[hit % specs.size()];
  auto roundtrip = characterization_roundtrip(rho, h);
  Counterexample ce;
  ce.predicate = "theorem-1.1-backward";
  ce.summary = "normalized unit-increasing table satisfying (E) that does not round-trip";
  ce.details.emplace_back("table", render_table(rho));
  ce.details.emplace_back("h", h.family().format());
  if (roundtrip.independence)
    ce.details.emplace_back("independence-family", roundtrip.independence->format());
  if (!roundtrip.matroid_ok)
    ce.details.emplace_back("failed", roundtrip.matroid_failure);
  else if (roundtrip.rank_mismatch) {
    const subset_t at = *roundtrip.rank_mismatch;
    RankTable recovered = rank_from_family(*roundtrip.independence);
    ce.details.emplace_back(
        "failed", "rank mismatch at " + rho.ground().format_subset(at) + ": table has " +
                      std::to_string(rho[at]) + ", rebuilt family has " +
                      std::to_string(recovered[at]));
  } else if (roundtrip.simplicial && !roundtrip.simplicial->ok)
    ce.details.emplace_back("failed", "independence family is not simplicial");
  return ce;
}

std::optional<Counterexample> sweep_rank_depends_on_max(const EnumerationBudget& budget) {
  if (budget.max_n == 4) {
    GroundSet ground(4);
    std::mt19937_64 rng(budget.seed);
    for (std::uint64_t i = 0; i < budget.sample_count; ++i) {
      auto [f1, f2] = random_family_pair_with_shared_max(ground, rng);
      if (maximal_members(f1) == maximal_members(f2) &&
          rank_from_family(f1) == rank_from_family(f2))
        continue;
      Counterexample ce;
      ce.predicate = "prop-3.1";
      ce.summary = "families with equal maximal members but different rank tables";
      ce.details.emplace_back("sample", std::to_string(i));
      ce.details.emplace_back("family-1", f1.format());
      ce.details.emplace_back("family-2", f2.format());
      return ce;
    }
    return std::nullopt;
  }
  require_sweep_n(budget.max_n, 3, "prop-3.1 (exhaustive; n=4 runs sampled)");
  auto families = all_constructible_families(budget.max_n);
  std::vector<std::pair<std::vector<subset_t>, std::size_t>> groups;
  std::vector<RankTable> ranks;
  ranks.reserve(families.size());
  for (const SetFamily& f : families) ranks.push_back(rank_from_family(f));
  for (std::size_t i = 0; i < families.size(); ++i) {
    auto max = maximal_members(families[i]);
    std::vector<subset_t> key(max.members().begin(), max.members().end());
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.emplace_back(std::move(key), i);
      continue;
    }
    if (ranks[it->second] == ranks[i]) continue;
    Counterexample ce;
    ce.predicate = "prop-3.1";
    ce.summary = "families with equal maximal members but different rank tables";
    ce.details.emplace_back("family-1", families[it->second].format());
    ce.details.emplace_back("family-2", families[i].format());
    ce.details.emplace_back("rank-1", render_table(ranks[it->second]));
    ce.details.emplace_back("rank-2", render_table(ranks[i]));
    return ce;
  }
  return std::nullopt;
}

std::optional<Counterexample> check_closure_invariants(const SetFamily& f,
                                                       const std::string& context) {
  SetFamily closed = downward_closure(f);
  std::string failed;
  if (!is_simplicial(closed).ok)
    failed = "closure is not simplicial";
  else if (!is_constructible(closed).ok)
    failed = "closure is not constructible";
  else if (!(maximal_members(f) == maximal_members(closed)))
    failed = "maximal members changed";
  else if (!(rank_from_family(f) == rank_from_family(closed)))
    failed = "rank table changed";
  if (failed.empty()) return std::nullopt;
  Counterexample ce;
  ce.predicate = "claim-3.2";
  ce.summary = "downward closure broke an invariant";
  if (!context.empty()) ce.details.emplace_back("sample", context);
  ce.details.emplace_back("family", f.format());
  ce.details.emplace_back("closure", closed.format());
  ce.details.emplace_back("failed", failed);
  return ce;
}

std::optional<Counterexample> sweep_simplicialization(const EnumerationBudget& budget) {
  if (budget.max_n == 4) {
    GroundSet ground(4);
    std::mt19937_64 rng(budget.seed);
    for (std::uint64_t i = 0; i < budget.sample_count; ++i) {
      auto ce = check_closure_invariants(random_constructible_family(ground, rng),
                                         std::to_string(i));
      if (ce) return ce;
    }
    return std::nullopt;
  }
  require_sweep_n(budget.max_n, 3, "claim-3.2 (exhaustive; n=4 runs sampled)");
  for (const SetFamily& f : all_constructible_families(budget.max_n)) {
    auto ce = check_closure_invariants(f, "");
    if (ce) return ce;
  }
  return std::nullopt;
}

std::optional<Counterexample> sweep_quadruple(const EnumerationBudget& budget) {
  require_sweep_n(budget.max_n, 3, "lemma-4.2");
  auto families = all_constructible_families(budget.max_n);
  auto specs = all_h_specs(budget.max_n);
  const std::size_t total = families.size() * specs.size();
  auto fails = [&](std::size_t idx) {
    const SetFamily& f = families[idx / specs.size()];
    const HSpec& h = specs[idx % specs.size()];
    if (!is_h_matroid(f, h).ok) return false;
    return !rank_quadruple_submodularity(rank_from_family(f), h).ok;
  };
  const std::size_t hit = par::first_hit(total, fails);
  if (hit == total) return std::nullopt;

  const SetFamily& f = families[hit / specs.size()];
  const HSpec& h = specs[hit % specs.size()];
  auto quad = rank_quadruple_submodularity(rank_from_family(f), h);
  Counterexample ce;
  ce.predicate = "lemma-4.2";
  ce.summary = "H-matroid rank violating quadruple submodularity";
  ce.details.emplace_back("family", f.format());
  ce.details.emplace_back("h", h.family().format());
  ce.details.emplace_back("quadruple", "H1=" + f.ground().format_subset(quad.h1) +
                                           ", H2=" + f.ground().format_subset(quad.h2) +
                                           ", G1=" + f.ground().format_subset(quad.g1) +
                                           ", G2=" + f.ground().format_subset(quad.g2));
  return ce;
}

ValuedSetFunction function_from_digits(const LatticeFamily& domain, std::uint64_t index,
                                       std::size_t count) {
  std::vector<Rational> values;
  values.reserve(count);
  values.emplace_back(0);
  for (std::size_t c = 1; c < count; ++c) {
    values.emplace_back(static_cast<long long>(index % 4));
    index /= 4;
  }
  return ValuedSetFunction(domain, std::move(values));
}

std::optional<Counterexample> sweep_polymatroid_equivalence(const EnumerationBudget& budget) {
  require_sweep_n(budget.max_n, 3, "prop-4.4");
  GroundSet ground(budget.max_n);
  std::vector<subset_t> all;
  for (std::size_t s = 0; s < ground.subset_count(); ++s)
    all.push_back(static_cast<subset_t>(s));
  const LatticeFamily domain{SetFamily(ground, all)};
  auto specs = all_h_specs(budget.max_n);

  std::uint64_t functions = 1;
  for (std::size_t c = 1; c < ground.subset_count(); ++c) functions *= 4;

  auto fails = [&](std::size_t idx) {
    ValuedSetFunction f =
        function_from_digits(domain, idx, ground.subset_count());
    bool all_h = true;
    for (const HSpec& h : specs)
      if (!satisfies_h_submodular(f, h)) {
        all_h = false;
        break;
      }
    return is_polymatroid(f).ok != all_h;
  };
  const std::size_t hit = par::first_hit(static_cast<std::size_t>(functions), fails);
  if (hit == functions) return std::nullopt;

  ValuedSetFunction f = function_from_digits(domain, hit, ground.subset_count());
  Counterexample ce;
  ce.predicate = "prop-4.4";
  ce.summary = "polymatroid verdict disagrees with the H-submodularity conjunction";
  std::string rendered;
  for (std::size_t c = 0; c < ground.subset_count(); ++c) {
    if (c > 0) rendered += ", ";
    rendered += "f(" + ground.format_subset(static_cast<subset_t>(c)) +
                ")=" + format_rational(f.value(static_cast<subset_t>(c)));
  }
  ce.details.emplace_back("function", rendered);
  ce.details.emplace_back("polymatroid", is_polymatroid(f).ok ? "yes" : "no");
  for (const HSpec& h : specs)
    if (!satisfies_h_submodular(f, h)) {
      ce.details.emplace_back("failing-h", h.family().format());
      break;
    }
  return ce;
}

std::optional<Counterexample> sweep_boolean_agreement(const EnumerationBudget& budget) {
  require_sweep_n(budget.max_n, 3, "boolean-supermatroid-agreement");
  GroundSet ground(budget.max_n);
  const FinitePoset lattice = FinitePoset::boolean_lattice(ground);
  auto specs = all_h_specs(budget.max_n);
  const std::uint64_t families = std::uint64_t{1} << ground.subset_count();
  const std::size_t total = families * specs.size();

  auto verdicts = [&](std::size_t idx) {
    const std::uint64_t mask = idx / specs.size();
    const HSpec& h = specs[idx % specs.size()];
    SetFamily f = family_from_mask(ground, mask);
    const bool matroid = is_h_matroid(f, h).ok;
    std::vector<int> members(f.members().begin(), f.members().end());
    std::vector<int> hs(h.members().begin(), h.members().end());
    const bool supermatroid =
        is_h_supermatroid(lattice, PosetSubset(lattice, std::move(members)),
                          PosetSubset(lattice, std::move(hs)))
            .ok;
    return std::pair(matroid, supermatroid);
  };
  auto fails = [&](std::size_t idx) {
    auto [matroid, supermatroid] = verdicts(idx);
    return matroid != supermatroid;
  };
  const std::size_t hit = par::first_hit(total, fails);
  if (hit == total) return std::nullopt;

  SetFamily f = family_from_mask(ground, hit / specs.size());
  const HSpec& h = specs[hit % specs.size()];
  auto [matroid, supermatroid] = verdicts(hit);
  Counterexample ce;
  ce.predicate = "boolean-supermatroid-agreement";
  ce.summary = "H-matroid and boolean-lattice H-supermatroid verdicts disagree";
  ce.details.emplace_back("family", f.format());
  ce.details.emplace_back("h", h.family().format());
  ce.details.emplace_back("h-matroid", matroid ? "yes" : "no");
  ce.details.emplace_back("h-supermatroid", supermatroid ? "yes" : "no");
  if (matroid != supermatroid && !matroid) {
    HMatroidReport report = is_h_matroid(f, h);
    ce.details.emplace_back("matroid-failure", report.describe_failure());
  }
  return ce;
}

std::optional<Counterexample> sweep_fixture_negated_m(const EnumerationBudget& budget) {
  require_sweep_n(budget.max_n, 3, "fixture-negated-M");
  auto families = all_constructible_families(budget.max_n);
  auto specs = all_h_specs(budget.max_n);
  const std::size_t total = families.size() * specs.size();
  auto fails = [&](std::size_t idx) {
    return !satisfies_axiom_m(families[idx / specs.size()], specs[idx % specs.size()]).ok;
  };
  const std::size_t hit = par::first_hit(total, fails);
  if (hit == total) return std::nullopt;

  const SetFamily& f = families[hit / specs.size()];
  const HSpec& h = specs[hit % specs.size()];
  auto check = satisfies_axiom_m(f, h);
  Counterexample ce;
  ce.predicate = "fixture-negated-M";
  ce.summary = "constructible family failing axiom (M)";
  ce.details.emplace_back("family", f.format());
  ce.details.emplace_back("h", h.family().format());
  ce.details.emplace_back("witness", "H=" + f.ground().format_subset(check.h) +
                                         ", base " + f.ground().format_subset(check.base));
  return ce;
}

struct PredicateEntry {
  PredicateInfo info;
  Sweep sweep;
};

const std::vector<PredicateEntry>& predicate_table() {
  static const std::vector<PredicateEntry> table = {
      {{"theorem-1.1-forward", "rank-characterization", false,
        "rank tables of simplicial H-matroids are normalized, unit-increasing and "
        "satisfy (E)"},
       sweep_forward},
      {{"theorem-1.1-backward", "rank-characterization", false,
        "normalized unit-increasing tables satisfying (E) rebuild as simplicial "
        "H-matroids with the same rank table"},
       sweep_backward},
      {{"prop-3.1", "rank-depends-on-max", false,
        "constructible families with equal maximal members have equal rank tables"},
       sweep_rank_depends_on_max},
      {{"claim-3.2", "simplicialization", false,
        "downward closure preserves constructibility, maximal members and rank"},
       sweep_simplicialization},
      {{"lemma-4.2", "Lemma 4.2", false,
        "H-matroid rank tables satisfy quadruple submodularity over H"},
       sweep_quadruple},
      {{"prop-4.4", "polymatroid-equivalence", false,
        "polymatroids are exactly the functions H-submodular for every constraint "
        "family"},
       sweep_polymatroid_equivalence},
      {{"boolean-supermatroid-agreement", "correspondence", false,
        "H-supermatroid and H-matroid verdicts agree on the boolean lattice"},
       sweep_boolean_agreement},
      {{"fixture-negated-M", "(M)", true,
        "negated fixture: axiom (M) holds for every constructible family"},
       sweep_fixture_negated_m},
  };
  return table;
}

}  // namespace

const std::vector<PredicateInfo>& registered_predicates() {
  static const std::vector<PredicateInfo> list = [] {
    std::vector<PredicateInfo> out;
    for (const auto& entry : predicate_table()) out.push_back(entry.info);
    return out;
  }();
  return list;
}

const PredicateInfo& predicate_info(const std::string& id) {
  for (const auto& entry : predicate_table())
    if (entry.info.id == id) return entry.info;
  fail(ErrorKind::unknown_predicate, "unknown predicate '" + id + "'");
}

std::optional<Counterexample> find_counterexample(const std::string& predicate_id,
                                                  const EnumerationBudget& budget) {
  for (const auto& entry : predicate_table())
    if (entry.info.id == predicate_id) return entry.sweep(budget);
  fail(ErrorKind::unknown_predicate, "unknown predicate '" + predicate_id + "'");
}

}  // namespace hmat
