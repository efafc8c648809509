#include "hmat/serial_reference.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace hmat::serial {

RankTable rank_from_family(const SetFamily& family) {
  ConstructibleCheck c = is_constructible(family);
  if (!c.ok) fail(ErrorKind::not_constructible, "family is not constructible");
  const std::size_t count = family.ground().subset_count();
  std::vector<std::int32_t> values(count, 0);
  for (std::size_t x = 0; x < count; ++x) {
    int best = 0;
    for (subset_t m : family.members())
      best = std::max(best, set_size(static_cast<subset_t>(x) & m));
    values[x] = best;
  }
  return RankTable(family.ground(), std::move(values));
}

ExtensionCheck satisfies_extension_property(const RankTable& rho, const HSpec& h) {
  require_same_ground(rho.ground(), h.ground());
  if (!is_normalized_unit_increasing(rho).ok)
    fail(ErrorKind::not_unit_increasing, "rank table is not normalized unit-increasing");
  ExtensionCheck check;
  const std::size_t count = rho.ground().subset_count();
  for (std::size_t xi = 0; xi < count; ++xi) {
    const auto x = static_cast<subset_t>(xi);
    for (subset_t hm : h.members()) {
      if (!subset_of(x, hm)) continue;
      if (rho[x] != set_size(x) || rho[x] >= rho[hm]) continue;
      bool extends = false;
      for_each_element(hm & ~x, [&](int e) {
        if (rho[x | element_bit(e)] == rho[x] + 1) extends = true;
      });
      if (!extends) {
        check.set = x;
        check.h = hm;
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

QuadrupleCheck rank_quadruple_submodularity(const RankTable& rho, const HSpec& h) {
  require_same_ground(rho.ground(), h.ground());
  QuadrupleCheck check;
  for (subset_t h1 : h.members())
    for (subset_t h2 : h.members()) {
      if (!subset_of(h1, h2)) continue;
      for (subset_t g1 : h.members())
        for (subset_t g2 : h.members()) {
          if (!subset_of(h1, g1 & g2) || !subset_of(h2, g1 | g2)) continue;
          if (rho[h1] + rho[h2] > rho[g1] + rho[g2]) {
            check.h1 = h1;
            check.h2 = h2;
            check.g1 = g1;
            check.g2 = g2;
            return check;
          }
        }
    }
  check.ok = true;
  return check;
}

HSubmodularCheck is_h_submodular(const ValuedSetFunction& f, const HSpec& h) {
  require_same_ground(f.ground(), h.ground());
  for (subset_t hm : h.members())
    if (!f.domain().family().contains(hm))
      fail(ErrorKind::h_not_in_domain, "H member outside the domain");

  HSubmodularCheck best;
  bool any = false;
  auto tuple_key = [](const HSubmodularCheck& c) {
    return std::tuple(c.x, c.y, c.h1, c.h2);
  };
  for (subset_t x : f.domain().members())
    for (subset_t y : f.domain().members()) {
      const Rational rhs = f.value(x) + f.value(y);
      for (subset_t h1 : h.members()) {
        if (!subset_of(h1, x & y)) continue;
        for (subset_t h2 : h.members()) {
          if (!subset_of(h1, h2) || !subset_of(h2, x | y)) continue;
          Rational lhs = f.value(h1) + f.value(h2);
          if (lhs <= rhs) continue;
          HSubmodularCheck cand;
          cand.x = x;
          cand.y = y;
          cand.h1 = h1;
          cand.h2 = h2;
          cand.violation = lhs - rhs;
          if (!any || cand.violation > best.violation ||
              (cand.violation == best.violation && tuple_key(cand) < tuple_key(best))) {
            best = cand;
            any = true;
          }
        }
      }
    }
  if (!any) {
    best.ok = true;
    return best;
  }
  best.ok = false;
  return best;
}

PolymatroidCheck is_polymatroid(const ValuedSetFunction& f) {
  if (!f.domain().is_power_set())
    fail(ErrorKind::domain_not_power_set, "domain must be the full power set");
  PolymatroidCheck check;
  if (f.value(0) != Rational(0)) {
    check.condition = 1;
    return check;
  }
  const std::size_t count = f.ground().subset_count();
  for (std::size_t xi = 0; xi < count; ++xi)
    for (int e = 0; e < f.ground().size(); ++e) {
      const auto x = static_cast<subset_t>(xi);
      if (x & element_bit(e)) continue;
      if (f.value(x) > f.value(x | element_bit(e))) {
        check.condition = 2;
        check.x = x;
        check.y = x | element_bit(e);
        return check;
      }
    }
  for (std::size_t xi = 0; xi < count; ++xi)
    for (std::size_t yi = xi; yi < count; ++yi) {
      const auto x = static_cast<subset_t>(xi);
      const auto y = static_cast<subset_t>(yi);
      if (f.value(x) + f.value(y) < f.value(x & y) + f.value(x | y)) {
        check.condition = 3;
        check.x = x;
        check.y = y;
        return check;
      }
    }
  check.ok = true;
  return check;
}

SetFamily downward_closure(const SetFamily& family) {
  if (family.empty()) fail(ErrorKind::empty_family, "family has no members");
  std::vector<subset_t> out;
  for (std::size_t x = 0; x < family.ground().subset_count(); ++x)
    for (subset_t m : family.members())
      if (subset_of(static_cast<subset_t>(x), m)) {
        out.push_back(static_cast<subset_t>(x));
        break;
      }
  return SetFamily(family.ground(), std::move(out));
}

}  // namespace hmat::serial
