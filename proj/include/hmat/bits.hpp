#pragma once

#include <bit>
#include <cstdint>

namespace hmat {

// A subset of the ground set, one bit per element: bit i set <=> element i in.
using subset_t = std::uint32_t;

inline int set_size(subset_t s) { return std::popcount(s); }

inline bool subset_of(subset_t a, subset_t b) { return (a & ~b) == 0; }

inline bool proper_subset_of(subset_t a, subset_t b) {
  return a != b && subset_of(a, b);
}

inline subset_t element_bit(int e) { return subset_t{1} << e; }

// Visits the elements of s in ascending order.
template <class Fn>
void for_each_element(subset_t s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

}  // namespace hmat
