#include "hmat/hmatroid.hpp"

#include <atomic>

namespace hmat {

namespace {

void require_constructible(const SetFamily& family) {
  ConstructibleCheck c = is_constructible(family);
  if (!c.ok)
    fail(ErrorKind::not_constructible,
         c.empty_family ? "family has no members"
                        : "family is not constructible, witness " +
                              family.ground().format_subset(c.violator));
}

AxiomICheck axiom_i_with_rank(const SetFamily& family, const HSpec& h,
                              const RankTable& rho) {
  AxiomICheck check;
  for (subset_t hm : h.members()) {
    bool attained = false;
    for (subset_t m : family.members()) {
      if (subset_of(m, hm) && set_size(m) == rho[hm]) {
        attained = true;
        break;
      }
    }
    if (!attained) {
      check.h = hm;
      return check;
    }
  }
  check.ok = true;
  return check;
}

AxiomMCheck axiom_m_with_rank(const SetFamily& family, const HSpec& h,
                              const RankTable& rho) {
  AxiomMCheck check;
  for (subset_t hm : h.members()) {
    SetFamily base_family = bases(restriction(family, hm));
    for (subset_t b : base_family.members()) {
      if (set_size(b) != rho[hm]) {
        check.h = hm;
        check.base = b;
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

}  // namespace

AxiomICheck satisfies_axiom_i(const SetFamily& family, const HSpec& h) {
  require_same_ground(family.ground(), h.ground());
  require_constructible(family);
  return axiom_i_with_rank(family, h, rank_from_family(family));
}

AxiomMCheck satisfies_axiom_m(const SetFamily& family, const HSpec& h) {
  require_same_ground(family.ground(), h.ground());
  require_constructible(family);
  return axiom_m_with_rank(family, h, rank_from_family(family));
}

HMatroidReport is_h_matroid(const SetFamily& family, const HSpec& h) {
  require_same_ground(family.ground(), h.ground());
  HMatroidReport report;
  report.constructible = is_constructible(family);
  if (!report.constructible.ok) {
    report.failure =
        report.constructible.empty_family
            ? "(C) fails: family has no members"
            : "(C) fails at " + family.ground().format_subset(report.constructible.violator);
    return report;
  }
  RankTable rho = rank_from_family(family);
  report.axiom_i = axiom_i_with_rank(family, h, rho);
  if (!report.axiom_i->ok) {
    report.failure = "(I) fails at H=" + family.ground().format_subset(report.axiom_i->h);
    return report;
  }
  report.axiom_m = axiom_m_with_rank(family, h, rho);
  if (!report.axiom_m->ok) {
    report.failure = "(M) fails at H=" + family.ground().format_subset(report.axiom_m->h) +
                     ", base " + family.ground().format_subset(report.axiom_m->base);
    return report;
  }
  report.ok = true;
  return report;
}

QuadrupleCheck rank_quadruple_submodularity(const RankTable& rho, const HSpec& h) {
  require_same_ground(rho.ground(), h.ground());
  auto hs = h.members();
  const std::size_t k = hs.size();
  const std::size_t pairs = k * k;
  std::atomic<std::size_t> best{pairs * pairs};
#pragma omp parallel for schedule(dynamic, 16)
  for (long long p = 0; p < static_cast<long long>(pairs); ++p) {
    const subset_t h1 = hs[static_cast<std::size_t>(p) / k];
    const subset_t h2 = hs[static_cast<std::size_t>(p) % k];
    if (!subset_of(h1, h2)) continue;
    const std::size_t offset = static_cast<std::size_t>(p) * pairs;
    if (offset >= best.load(std::memory_order_relaxed)) continue;
    const std::int32_t lhs = rho[h1] + rho[h2];
    bool recorded = false;
    for (std::size_t q1 = 0; q1 < k && !recorded; ++q1) {
      const subset_t g1 = hs[q1];
      for (std::size_t q2 = 0; q2 < k; ++q2) {
        const subset_t g2 = hs[q2];
        if (!subset_of(h1, g1 & g2) || !subset_of(h2, g1 | g2)) continue;
        if (lhs > rho[g1] + rho[g2]) {
          const std::size_t idx = offset + q1 * k + q2;
          std::size_t cur = best.load(std::memory_order_relaxed);
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          recorded = true;  // later (q1, q2) cannot beat idx
          break;
        }
      }
    }
  }

  QuadrupleCheck check;
  const std::size_t found = best.load();
  if (found == pairs * pairs) {
    check.ok = true;
    return check;
  }
  const std::size_t p = found / pairs, q = found % pairs;
  check.h1 = hs[p / k];
  check.h2 = hs[p % k];
  check.g1 = hs[q / k];
  check.g2 = hs[q % k];
  return check;
}

}  // namespace hmat
