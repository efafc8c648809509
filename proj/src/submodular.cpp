#include "hmat/submodular.hpp"

#include <algorithm>
#include <charconv>

namespace hmat {

namespace {

long long parse_integer(const std::string& text) {
  long long out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    fail(ErrorKind::parse_error, "invalid integer '" + text + "'");
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  long long num = parse_integer(text.substr(0, slash));
  long long den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::parse_error, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

LatticeCheck is_distributive_lattice_family(const SetFamily& family) {
  LatticeCheck check;
  if (!family.contains(0)) {
    check.why = LatticeCheck::Fail::missing_empty;
    return check;
  }
  auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(members[i] | members[j])) {
        check.why = LatticeCheck::Fail::union_missing;
        check.x = members[i];
        check.y = members[j];
        return check;
      }
      if (!family.contains(members[i] & members[j])) {
        check.why = LatticeCheck::Fail::intersection_missing;
        check.x = members[i];
        check.y = members[j];
        return check;
      }
    }
  }
  if (!family.contains(family.ground().full())) {
    check.why = LatticeCheck::Fail::missing_full;
    return check;
  }
  check.ok = true;
  return check;
}

LatticeFamily::LatticeFamily(SetFamily family) : family_(std::move(family)) {
  LatticeCheck check = is_distributive_lattice_family(family_);
  if (!check.ok) {
    std::string msg;
    switch (check.why) {
      case LatticeCheck::Fail::missing_empty:
        msg = "missing the empty set";
        break;
      case LatticeCheck::Fail::missing_full:
        msg = "missing the full ground set";
        break;
      case LatticeCheck::Fail::union_missing:
        msg = "union of " + family_.ground().format_subset(check.x) + " and " +
              family_.ground().format_subset(check.y) + " is missing";
        break;
      default:
        msg = "intersection of " + family_.ground().format_subset(check.x) +
              " and " + family_.ground().format_subset(check.y) + " is missing";
        break;
    }
    fail(ErrorKind::not_a_lattice, "domain is not a distributive lattice: " + msg);
  }
}

ValuedSetFunction::ValuedSetFunction(LatticeFamily domain, std::vector<Rational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.members().size())
    fail(ErrorKind::invalid_value, "function needs exactly one value per domain member");
}

Rational ValuedSetFunction::value(subset_t s) const {
  auto members = domain_.members();
  auto it = std::lower_bound(members.begin(), members.end(), s);
  if (it == members.end() || *it != s)
    fail(ErrorKind::not_a_member,
         ground().format_subset(s) + " is not in the function's domain");
  return values_[static_cast<std::size_t>(it - members.begin())];
}

namespace {

void require_h_in_domain(const ValuedSetFunction& f, const HSpec& h) {
  require_same_ground(f.ground(), h.ground());
  for (subset_t hm : h.members())
    if (!f.domain().family().contains(hm))
      fail(ErrorKind::h_not_in_domain,
           "H member " + f.ground().format_subset(hm) + " is outside the domain");
}

struct SViolation {
  Rational amount;
  subset_t x = 0, y = 0, h1 = 0, h2 = 0;

  bool better_than(const SViolation& other) const {
    if (amount != other.amount) return amount > other.amount;
    auto key = [](const SViolation& v) {
      return std::tuple(v.x, v.y, v.h1, v.h2);
    };
    return key(*this) < key(other);
  }
};

// Best violation over the (H1, H2) choices for a fixed (X, Y), if any.
std::optional<SViolation> cell_violation(const ValuedSetFunction& f, const HSpec& h,
                                         subset_t x, subset_t y, const Rational& fx_fy) {
  std::optional<SViolation> best;
  const subset_t meet = x & y;
  const subset_t join = x | y;
  for (subset_t h1 : h.members()) {
    if (!subset_of(h1, meet)) continue;
    for (subset_t h2 : h.members()) {
      if (!subset_of(h1, h2) || !subset_of(h2, join)) continue;
      Rational lhs = f.value(h1) + f.value(h2);
      if (lhs > fx_fy) {
        SViolation v{lhs - fx_fy, x, y, h1, h2};
        if (!best || v.better_than(*best)) best = v;
      }
    }
  }
  return best;
}

}  // namespace

bool satisfies_h_submodular(const ValuedSetFunction& f, const HSpec& h) {
  require_h_in_domain(f, h);
  auto domain = f.domain().members();
  for (subset_t x : domain) {
    const Rational fx = f.value(x);
    for (subset_t y : domain) {
      const Rational fx_fy = fx + f.value(y);
      const subset_t meet = x & y;
      const subset_t join = x | y;
      for (subset_t h1 : h.members()) {
        if (!subset_of(h1, meet)) continue;
        for (subset_t h2 : h.members()) {
          if (!subset_of(h1, h2) || !subset_of(h2, join)) continue;
          if (f.value(h1) + f.value(h2) > fx_fy) return false;
        }
      }
    }
  }
  return true;
}

HSubmodularCheck is_h_submodular(const ValuedSetFunction& f, const HSpec& h) {
  require_h_in_domain(f, h);
  auto domain = f.domain().members();
  const std::size_t d = domain.size();
  const std::size_t cells = d * d;

  std::optional<SViolation> best;
#pragma omp parallel
  {
    std::optional<SViolation> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long c = 0; c < static_cast<long long>(cells); ++c) {
      const subset_t x = domain[static_cast<std::size_t>(c) / d];
      const subset_t y = domain[static_cast<std::size_t>(c) % d];
      auto v = cell_violation(f, h, x, y, f.value(x) + f.value(y));
      if (v && (!local || v->better_than(*local))) local = v;
    }
#pragma omp critical(hmat_s_violation)
    {
      if (local && (!best || local->better_than(*best))) best = local;
    }
  }

  HSubmodularCheck check;
  if (!best) {
    check.ok = true;
    return check;
  }
  check.x = best->x;
  check.y = best->y;
  check.h1 = best->h1;
  check.h2 = best->h2;
  check.violation = best->amount;
  return check;
}

PolymatroidCheck is_polymatroid(const ValuedSetFunction& f) {
  if (!f.domain().is_power_set())
    fail(ErrorKind::domain_not_power_set,
         "polymatroid check requires the full power set as domain");
  PolymatroidCheck check;
  if (f.value(0) != Rational(0)) {
    check.condition = 1;
    return check;
  }
  const int n = f.ground().size();
  const std::size_t count = f.ground().subset_count();
  for (std::size_t xi = 0; xi < count; ++xi) {
    const auto x = static_cast<subset_t>(xi);
    for (int e = 0; e < n; ++e) {
      if (x & element_bit(e)) continue;
      if (f.value(x) > f.value(x | element_bit(e))) {
        check.condition = 2;
        check.x = x;
        check.y = x | element_bit(e);
        return check;
      }
    }
  }
  for (std::size_t xi = 0; xi < count; ++xi) {
    const auto x = static_cast<subset_t>(xi);
    const Rational fx = f.value(x);
    for (std::size_t yi = xi; yi < count; ++yi) {
      const auto y = static_cast<subset_t>(yi);
      if (fx + f.value(y) < f.value(x & y) + f.value(x | y)) {
        check.condition = 3;
        check.x = x;
        check.y = y;
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

PolymatroidEquivalenceReport polymatroid_equivalence_check(
    const ValuedSetFunction& f, PropCheckMode mode) {
  if (!f.domain().is_power_set())
    fail(ErrorKind::domain_not_power_set,
         "equivalence check requires the full power set as domain");
  const GroundSet& ground = f.ground();

  PolymatroidEquivalenceReport report;
  report.mode = mode;
  report.polymatroid = is_polymatroid(f);
  report.all_h_pass = true;

  auto try_h = [&](const HSpec& h) {
    if (!report.all_h_pass) return;
    if (!satisfies_h_submodular(f, h)) {
      report.all_h_pass = false;
      report.failing_h = h.family();
      report.s_witness = is_h_submodular(f, h);
    }
  };

  if (mode == PropCheckMode::exhaustive) {
    if (ground.size() > 3)
      fail(ErrorKind::too_large_for_exhaustive,
           "exhaustive constraint-family sweep requires n <= 3");
    const std::uint64_t specs = std::uint64_t{1} << (ground.subset_count() - 2);
    for (std::uint64_t mask = 0; mask < specs && report.all_h_pass; ++mask)
      try_h(h_spec_from_middle_mask(ground, mask));
  } else {
    // {empty, X, E} yields monotonicity; the full power set yields
    // submodularity.
    for (std::size_t s = 0; s < ground.subset_count() && report.all_h_pass; ++s)
      try_h(HSpec(SetFamily(ground, {0, static_cast<subset_t>(s), ground.full()})));
    std::vector<subset_t> all;
    for (std::size_t s = 0; s < ground.subset_count(); ++s)
      all.push_back(static_cast<subset_t>(s));
    try_h(HSpec(SetFamily(ground, all)));
  }

  report.equivalent = report.polymatroid.ok == report.all_h_pass;
  return report;
}

RationalVector::RationalVector(GroundSet ground, std::vector<Rational> coords)
    : ground_(std::move(ground)), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(ground_.size()))
    fail(ErrorKind::invalid_value, "vector needs one coordinate per element");
}

Rational RationalVector::sum_over(subset_t s) const {
  Rational out(0);
  for_each_element(s, [&](int e) { out += coords_[e]; });
  return out;
}

PolyhedronCheck in_submodular_polyhedron(const RationalVector& x,
                                         const ValuedSetFunction& f) {
  require_same_ground(x.ground(), f.ground());
  PolyhedronCheck check;
  bool any = false;
  for (subset_t s : f.domain().members()) {
    Rational excess = x.sum_over(s) - f.value(s);
    if (excess > Rational(0) && (!any || excess > check.excess)) {
      any = true;
      check.set = s;
      check.excess = excess;
    }
  }
  check.ok = !any;
  return check;
}

BasePolyhedronCheck in_base_polyhedron(const RationalVector& x,
                                       const ValuedSetFunction& f) {
  require_same_ground(x.ground(), f.ground());
  if (!f.domain().family().contains(f.ground().full()))
    fail(ErrorKind::e_missing_from_domain, "domain does not contain the full set");
  BasePolyhedronCheck check;
  check.polyhedron = in_submodular_polyhedron(x, f);
  check.total = x.sum_over(f.ground().full());
  check.required = f.value(f.ground().full());
  check.total_matches = check.total == check.required;
  check.ok = check.polyhedron.ok && check.total_matches;
  return check;
}

}  // namespace hmat
