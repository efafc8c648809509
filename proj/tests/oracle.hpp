#pragma once

// Brute-force oracles over plain sets of integers. Everything here is written
// directly from the definitions and stays independent of the bitmask code
// paths it is used to check.

#include <map>
#include <set>
#include <vector>

#include "hmat/family.hpp"

namespace oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

inline bool is_subset(const Set& a, const Set& b) {
  for (int e : a)
    if (!b.count(e)) return false;
  return true;
}

inline std::vector<Set> all_subsets(int n) {
  std::vector<Set> out{Set{}};
  for (int e = 0; e < n; ++e) {
    std::vector<Set> grown = out;
    for (Set s : out) {
      s.insert(e);
      grown.push_back(s);
    }
    out = std::move(grown);
  }
  return out;
}

inline Set ex(const Family& family, const Set& member) {
  Set out;
  for (int e : member) {
    Set smaller = member;
    smaller.erase(e);
    if (family.count(smaller)) out.insert(e);
  }
  return out;
}

inline Set coex(const Family& family, const Set& member, int n) {
  Set out;
  for (int e = 0; e < n; ++e) {
    if (member.count(e)) continue;
    Set larger = member;
    larger.insert(e);
    if (family.count(larger)) out.insert(e);
  }
  return out;
}

inline Family max_members(const Family& family) {
  Family out;
  for (const Set& a : family) {
    bool maximal = true;
    for (const Set& b : family)
      if (a != b && is_subset(a, b)) maximal = false;
    if (maximal) out.insert(a);
  }
  return out;
}

inline Family bases(const Family& family, int n) {
  Family out;
  for (const Set& a : family)
    if (coex(family, a, n).empty()) out.insert(a);
  return out;
}

inline bool constructible(const Family& family) {
  if (family.empty()) return false;
  for (const Set& a : family)
    if (!a.empty() && ex(family, a).empty()) return false;
  return true;
}

inline Family restriction(const Family& family, const Set& within) {
  Family out;
  for (const Set& a : family)
    if (is_subset(a, within)) out.insert(a);
  return out;
}

inline bool simplicial(const Family& family, int n) {
  for (const Set& a : family)
    for (const Set& x : all_subsets(n))
      if (is_subset(x, a) && !family.count(x)) return false;
  return true;
}

inline Family closure(const Family& family, int n) {
  Family out;
  for (const Set& x : all_subsets(n))
    for (const Set& a : family)
      if (is_subset(x, a)) {
        out.insert(x);
        break;
      }
  return out;
}

inline int rank(const Family& family, const Set& x) {
  int best = 0;
  for (const Set& a : family) {
    int overlap = 0;
    for (int e : a)
      if (x.count(e)) ++overlap;
    best = std::max(best, overlap);
  }
  return best;
}

using Table = std::map<Set, int>;

inline Table rank_table(const Family& family, int n) {
  Table out;
  for (const Set& x : all_subsets(n)) out[x] = rank(family, x);
  return out;
}

// Two-sided unit-increase bound checked directly over every nested pair.
inline bool normalized_unit_increasing(const Table& rho, int n) {
  if (rho.at(Set{}) != 0) return false;
  for (const Set& x : all_subsets(n))
    for (const Set& y : all_subsets(n)) {
      if (!is_subset(x, y)) continue;
      const int diff = static_cast<int>(y.size() - x.size());
      if (rho.at(x) > rho.at(y) || rho.at(y) > rho.at(x) + diff) return false;
    }
  return true;
}

inline bool extension_property(const Table& rho, const Family& h, int n) {
  for (const Set& x : all_subsets(n))
    for (const Set& hm : h) {
      if (!is_subset(x, hm)) continue;
      if (rho.at(x) != static_cast<int>(x.size()) || rho.at(x) >= rho.at(hm)) continue;
      bool extends = false;
      for (int e : hm) {
        if (x.count(e)) continue;
        Set larger = x;
        larger.insert(e);
        if (rho.at(larger) == rho.at(x) + 1) extends = true;
      }
      if (!extends) return false;
    }
  return true;
}

inline bool axiom_i(const Family& family, const Family& h, int n) {
  Table rho = rank_table(family, n);
  for (const Set& hm : h) {
    bool attained = false;
    for (const Set& a : family)
      if (is_subset(a, hm) && static_cast<int>(a.size()) == rho.at(hm)) attained = true;
    if (!attained) return false;
  }
  return true;
}

inline bool axiom_m(const Family& family, const Family& h, int n) {
  Table rho = rank_table(family, n);
  for (const Set& hm : h)
    for (const Set& b : bases(restriction(family, hm), n))
      if (static_cast<int>(b.size()) != rho.at(hm)) return false;
  return true;
}

inline bool h_matroid(const Family& family, const Family& h, int n) {
  return constructible(family) && axiom_i(family, h, n) && axiom_m(family, h, n);
}

inline bool quadruple_submodular(const Table& rho, const Family& h) {
  for (const Set& h1 : h)
    for (const Set& h2 : h) {
      if (!is_subset(h1, h2)) continue;
      for (const Set& g1 : h)
        for (const Set& g2 : h) {
          Set meet, join = g1;
          for (int e : g1)
            if (g2.count(e)) meet.insert(e);
          for (int e : g2) join.insert(e);
          if (!is_subset(h1, meet) || !is_subset(h2, join)) continue;
          if (rho.at(h1) + rho.at(h2) > rho.at(g1) + rho.at(g2)) return false;
        }
    }
  return true;
}

// Pairwise submodular inequality over all pairs, on a full power-set table
// of rational values scaled to a common denominator (integer values suffice
// for the tests that use this).
inline bool pairwise_submodular(const std::map<Set, long long>& f, int n) {
  for (const Set& x : all_subsets(n))
    for (const Set& y : all_subsets(n)) {
      Set meet, join = x;
      for (int e : x)
        if (y.count(e)) meet.insert(e);
      for (int e : y) join.insert(e);
      if (f.at(x) + f.at(y) < f.at(meet) + f.at(join)) return false;
    }
  return true;
}

// Conversions at the boundary.

inline Set to_set(hmat::subset_t code) {
  Set out;
  hmat::for_each_element(code, [&](int e) { out.insert(e); });
  return out;
}

inline hmat::subset_t to_code(const Set& s) {
  hmat::subset_t out = 0;
  for (int e : s) out |= hmat::element_bit(e);
  return out;
}

inline Family to_family(const hmat::SetFamily& family) {
  Family out;
  for (hmat::subset_t m : family.members()) out.insert(to_set(m));
  return out;
}

inline hmat::SetFamily from_family(const hmat::GroundSet& ground, const Family& family) {
  std::vector<hmat::subset_t> members;
  for (const Set& s : family) members.push_back(to_code(s));
  return hmat::SetFamily(ground, std::move(members));
}

}  // namespace oracle
