#include "hmat/rank.hpp"

#include <atomic>

#include "hmat/hmatroid.hpp"

namespace hmat {

namespace {

void require_unit_increasing(const RankTable& rho) {
  if (!is_normalized_unit_increasing(rho).ok)
    fail(ErrorKind::not_unit_increasing,
         "rank table is not normalized unit-increasing");
}

}  // namespace

RankTable rank_from_family(const SetFamily& family) {
  ConstructibleCheck c = is_constructible(family);
  if (!c.ok)
    fail(ErrorKind::not_constructible,
         c.empty_family ? "family has no members"
                        : "family is not constructible, witness " +
                              family.ground().format_subset(c.violator));
  const std::size_t count = family.ground().subset_count();
  std::vector<std::int32_t> values(count, 0);
  auto members = family.members();
#pragma omp parallel for schedule(static) if (count >= 4096)
  for (long long x = 0; x < static_cast<long long>(count); ++x) {
    const auto sx = static_cast<subset_t>(x);
    const int cap = set_size(sx);
    int best = 0;
    for (subset_t m : members) {
      int overlap = set_size(sx & m);
      if (overlap > best) {
        best = overlap;
        if (best == cap) break;
      }
    }
    values[static_cast<std::size_t>(x)] = best;
  }
  return RankTable(family.ground(), std::move(values));
}

UnitIncreaseCheck is_normalized_unit_increasing(const RankTable& rho) {
  UnitIncreaseCheck check;
  if (rho[0] != 0) {
    check.normalization_failed = true;
    return check;
  }
  const int n = rho.ground().size();
  const std::size_t count = rho.ground().subset_count();
  for (std::size_t x = 0; x < count; ++x) {
    const auto sx = static_cast<subset_t>(x);
    for (int e = 0; e < n; ++e) {
      if (sx & element_bit(e)) continue;
      const std::int32_t lo = rho[sx];
      const std::int32_t hi = rho[sx | element_bit(e)];
      if (hi < lo || hi > lo + 1) {
        check.set = sx;
        check.element = e;
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

ExtensionCheck satisfies_extension_property(const RankTable& rho, const HSpec& h) {
  require_same_ground(rho.ground(), h.ground());
  require_unit_increasing(rho);

  auto hs = h.members();
  const std::size_t count = rho.ground().subset_count();
  // Witness index (X, H-position) in (X, H) ascending order; the reduction
  // keeps the smallest one.
  const std::size_t total = count * hs.size();
  std::atomic<std::size_t> best{total};
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    const auto x = static_cast<subset_t>(i);
    const std::size_t base = static_cast<std::size_t>(i) * hs.size();
    if (base >= best.load(std::memory_order_relaxed)) continue;
    if (rho[x] != set_size(x)) continue;  // only independent X can violate
    for (std::size_t hi = 0; hi < hs.size(); ++hi) {
      const subset_t hm = hs[hi];
      if (!subset_of(x, hm) || rho[x] >= rho[hm]) continue;
      bool extends = false;
      for_each_element(hm & ~x, [&](int e) {
        if (rho[x | element_bit(e)] == rho[x] + 1) extends = true;
      });
      if (!extends) {
        const std::size_t idx = base + hi;
        std::size_t cur = best.load(std::memory_order_relaxed);
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        break;  // later H cannot beat idx for this X
      }
    }
  }

  ExtensionCheck check;
  const std::size_t found = best.load();
  if (found == total) {
    check.ok = true;
    return check;
  }
  check.set = static_cast<subset_t>(found / hs.size());
  check.h = hs[found % hs.size()];
  return check;
}

SetFamily independence_family_of(const RankTable& rho) {
  require_unit_increasing(rho);
  std::vector<subset_t> members;
  const std::size_t count = rho.ground().subset_count();
  for (std::size_t x = 0; x < count; ++x)
    if (rho[static_cast<subset_t>(x)] == set_size(static_cast<subset_t>(x)))
      members.push_back(static_cast<subset_t>(x));
  return SetFamily(rho.ground(), std::move(members));
}

CharacterizationRoundtrip characterization_roundtrip(const RankTable& rho,
                                                     const HSpec& h) {
  require_same_ground(rho.ground(), h.ground());
  CharacterizationRoundtrip report;
  report.unit_increasing = is_normalized_unit_increasing(rho);
  if (!report.unit_increasing.ok) return report;

  report.extension = satisfies_extension_property(rho, h);
  if (!report.extension->ok) return report;

  SetFamily independence = independence_family_of(rho);
  report.independence = independence;

  HMatroidReport matroid = is_h_matroid(independence, h);
  report.matroid_ok = matroid.ok;
  if (!matroid.ok) report.matroid_failure = matroid.describe_failure();

  RankTable recovered = rank_from_family(independence);
  report.rank_checked = true;
  for (std::size_t x = 0; x < rho.ground().subset_count(); ++x) {
    if (recovered[static_cast<subset_t>(x)] != rho[static_cast<subset_t>(x)]) {
      report.rank_mismatch = static_cast<subset_t>(x);
      break;
    }
  }

  report.simplicial = is_simplicial(independence);

  report.ok = report.matroid_ok && !report.rank_mismatch.has_value() &&
              report.simplicial->ok;
  return report;
}

}  // namespace hmat
