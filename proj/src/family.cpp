#include "hmat/family.hpp"

#include <cassert>

namespace hmat {

namespace {

void require_member(const SetFamily& family, subset_t member) {
  if (!family.contains(member))
    fail(ErrorKind::not_a_member,
         family.ground().format_subset(member) + " is not a member of the family");
}

void require_nonempty(const SetFamily& family) {
  if (family.empty()) fail(ErrorKind::empty_family, "family has no members");
}

}  // namespace

subset_t extreme_points(const SetFamily& family, subset_t member) {
  require_member(family, member);
  subset_t out = 0;
  for_each_element(member, [&](int e) {
    if (family.contains(member ^ element_bit(e))) out |= element_bit(e);
  });
  return out;
}

subset_t co_extreme_points(const SetFamily& family, subset_t member) {
  require_member(family, member);
  subset_t out = 0;
  for_each_element(family.ground().full() & ~member, [&](int e) {
    if (family.contains(member | element_bit(e))) out |= element_bit(e);
  });
  return out;
}

SetFamily maximal_members(const SetFamily& family) {
  require_nonempty(family);
  auto members = family.members();
  std::vector<subset_t> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool maximal = true;
    // A proper superset has a larger integer value, so scanning forward suffices.
    for (std::size_t j = i + 1; j < members.size() && maximal; ++j)
      if (proper_subset_of(members[i], members[j])) maximal = false;
    if (maximal) out.push_back(members[i]);
  }
  return SetFamily(family.ground(), std::move(out));
}

SetFamily bases(const SetFamily& family) {
  require_nonempty(family);
  std::vector<subset_t> out;
  for (subset_t m : family.members())
    if (co_extreme_points(family, m) == 0) out.push_back(m);
  return SetFamily(family.ground(), std::move(out));
}

ConstructibleCheck is_constructible(const SetFamily& family) {
  ConstructibleCheck check;
  if (family.empty()) {
    check.empty_family = true;
    return check;
  }
  for (subset_t m : family.members()) {
    if (m == 0) continue;
    if (extreme_points(family, m) == 0) {
      check.violator = m;
      return check;
    }
  }
  // Descending one element at a time from any member ends at the empty set.
  assert(family.contains(0));
  check.ok = true;
  return check;
}

SetFamily restriction(const SetFamily& family, subset_t within) {
  std::vector<subset_t> out;
  for (subset_t m : family.members())
    if (subset_of(m, within)) out.push_back(m);
  return SetFamily(family.ground(), std::move(out));
}

SimplicialCheck is_simplicial(const SetFamily& family) {
  require_nonempty(family);
  SimplicialCheck check;
  for (subset_t m : family.members()) {
    subset_t missing = m & ~extreme_points(family, m);
    if (missing != 0) {
      check.member = m;
      check.element = std::countr_zero(missing);
      return check;
    }
  }
  check.ok = true;
  return check;
}

SetFamily downward_closure(const SetFamily& family) {
  require_nonempty(family);
  const std::size_t count = family.ground().subset_count();
  const std::size_t blocks = (count + 63) / 64;
  std::vector<std::uint64_t> bitmap(blocks, 0);
  auto members = family.members();
#pragma omp parallel
  {
    // Expand each member's power set into a thread-local bitmap, then merge.
    std::vector<std::uint64_t> local(blocks, 0);
#pragma omp for schedule(dynamic, 8) nowait
    for (long long i = 0; i < static_cast<long long>(members.size()); ++i) {
      const subset_t m = members[static_cast<std::size_t>(i)];
      subset_t s = m;
      while (true) {
        local[s >> 6] |= std::uint64_t{1} << (s & 63);
        if (s == 0) break;
        s = (s - 1) & m;
      }
    }
#pragma omp critical(hmat_closure_merge)
    for (std::size_t b = 0; b < blocks; ++b) bitmap[b] |= local[b];
  }
  std::vector<subset_t> out;
  for (std::size_t x = 0; x < count; ++x)
    if (bitmap[x >> 6] & (std::uint64_t{1} << (x & 63)))
      out.push_back(static_cast<subset_t>(x));
  return SetFamily(family.ground(), std::move(out));
}

}  // namespace hmat
