#include "hmat/poset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hmat {

namespace {

void require_index(const FinitePoset& poset, int x) {
  if (x < 0 || x >= poset.size())
    fail(ErrorKind::out_of_range, "poset element index " + std::to_string(x) +
                                      " out of range");
}

}  // namespace

FinitePoset FinitePoset::from_relation(std::vector<std::string> names,
                                       const std::vector<std::pair<int, int>>& leq_pairs,
                                       bool transitive_close) {
  FinitePoset p;
  p.size_ = static_cast<int>(names.size());
  if (p.size_ == 0) fail(ErrorKind::invalid_poset, "poset has no elements");
  p.names_ = std::move(names);
  p.leq_.assign(static_cast<std::size_t>(p.size_) * p.size_, 0);

  for (auto [x, y] : leq_pairs) {
    if (x < 0 || x >= p.size_ || y < 0 || y >= p.size_)
      fail(ErrorKind::invalid_poset, "relation pair out of range");
    p.leq_[p.index(x, y)] = 1;
  }
  for (int x = 0; x < p.size_; ++x) p.leq_[p.index(x, x)] = 1;

  if (transitive_close) {
    for (int z = 0; z < p.size_; ++z)
      for (int x = 0; x < p.size_; ++x)
        if (p.leq(x, z))
          for (int y = 0; y < p.size_; ++y)
            if (p.leq(z, y)) p.leq_[p.index(x, y)] = 1;
  } else {
    for (int x = 0; x < p.size_; ++x)
      for (int y = 0; y < p.size_; ++y)
        if (p.leq(x, y))
          for (int z = 0; z < p.size_; ++z)
            if (p.leq(y, z) && !p.leq(x, z))
              fail(ErrorKind::invalid_poset,
                   "transitivity fails: " + p.names_[x] + " <= " + p.names_[y] +
                       " <= " + p.names_[z]);
  }

  for (int x = 0; x < p.size_; ++x)
    for (int y = x + 1; y < p.size_; ++y)
      if (p.leq(x, y) && p.leq(y, x))
        fail(ErrorKind::invalid_poset,
             "antisymmetry fails between " + p.names_[x] + " and " + p.names_[y]);

  int bottom = -1;
  for (int x = 0; x < p.size_ && bottom < 0; ++x) {
    bool below_all = true;
    for (int y = 0; y < p.size_; ++y)
      if (!p.leq(x, y)) {
        below_all = false;
        break;
      }
    if (below_all) bottom = x;
  }
  if (bottom < 0)
    fail(ErrorKind::invalid_poset, "minimum element: no element lies below all others");
  p.bottom_ = bottom;

  p.derive_covers_and_heights();
  return p;
}

FinitePoset FinitePoset::boolean_lattice(const GroundSet& ground) {
  if (ground.size() > 12)
    fail(ErrorKind::budget_exceeded, "boolean lattice poset limited to n <= 12");
  FinitePoset p;
  p.size_ = static_cast<int>(ground.subset_count());
  p.bottom_ = 0;
  p.names_.reserve(p.size_);
  for (int s = 0; s < p.size_; ++s)
    p.names_.push_back(ground.format_subset(static_cast<subset_t>(s)));
  p.leq_.assign(static_cast<std::size_t>(p.size_) * p.size_, 0);
  p.covers_.assign(p.leq_.size(), 0);
  p.heights_.assign(p.size_, 0);
  for (int x = 0; x < p.size_; ++x) {
    p.heights_[x] = set_size(static_cast<subset_t>(x));
    for (int y = 0; y < p.size_; ++y) {
      if (subset_of(static_cast<subset_t>(x), static_cast<subset_t>(y))) {
        p.leq_[p.index(x, y)] = 1;
        if (set_size(static_cast<subset_t>(y)) == p.heights_[x] + 1)
          p.covers_[p.index(x, y)] = 1;
      }
    }
  }
  return p;
}

void FinitePoset::derive_covers_and_heights() {
  covers_.assign(leq_.size(), 0);
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < size_ && direct; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) direct = false;
      if (direct) covers_[index(x, y)] = 1;
    }
  }

  // Longest-path heights over the cover digraph, in a linear extension.
  std::vector<int> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below(size_, 0);
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y)
      if (y != x && leq(y, x)) ++below[x];
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return below[a] < below[b]; });

  heights_.assign(size_, 0);
  for (int x : order) {
    int best = 0;
    for (int y = 0; y < size_; ++y)
      if (covers(y, x)) best = std::max(best, heights_[y] + 1);
    heights_[x] = best;
  }
  assert(heights_[bottom_] == 0);
}

std::optional<int> FinitePoset::index_of(const std::string& name) const {
  for (int i = 0; i < size_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<int> FinitePoset::interval(int x, int y) const {
  require_index(*this, x);
  require_index(*this, y);
  std::vector<int> out;
  for (int z = 0; z < size_; ++z)
    if (leq(x, z) && leq(z, y)) out.push_back(z);
  return out;
}

PosetSubset::PosetSubset(const FinitePoset& poset, std::vector<int> members)
    : members_(std::move(members)) {
  for (int m : members_) require_index(poset, m);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool PosetSubset::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

int poset_height(const FinitePoset& poset, int x) {
  require_index(poset, x);
  return poset.height(x);
}

AccessibleCheck is_accessible(const FinitePoset& poset, const PosetSubset& family) {
  AccessibleCheck check;
  for (int i : family.members()) {
    if (i == poset.bottom()) continue;
    bool covered = false;
    for (int x : family.members()) {
      if (x != i && poset.covers(x, i)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      check.violator = i;
      return check;
    }
  }
  // A nonempty accessible family reaches the minimum by descending covers.
  assert(family.empty() || family.contains(poset.bottom()));
  check.ok = true;
  return check;
}

int poset_rank(const FinitePoset& poset, const PosetSubset& family, int x) {
  require_index(poset, x);
  if (!family.contains(poset.bottom()))
    fail(ErrorKind::zero_missing, "family does not contain the minimum element");
  int best = 0;
  for (int i : family.members())
    if (poset.leq(i, x)) best = std::max(best, poset.height(i));
  return best;
}

SupermatroidReport is_h_supermatroid(const FinitePoset& poset,
                                     const PosetSubset& family,
                                     const PosetSubset& h) {
  if (!h.contains(poset.bottom()))
    fail(ErrorKind::zero_missing_from_h, "H does not contain the minimum element");

  SupermatroidReport report;
  if (family.empty()) {
    report.empty_family = true;
    report.accessible.ok = true;  // vacuous
    return report;
  }
  report.accessible = is_accessible(poset, family);
  if (!report.accessible.ok) return report;

  HeightCheck heights;
  heights.ok = true;
  for (int a : h.members()) {
    std::vector<int> inside;
    for (int i : family.members())
      if (poset.leq(i, a)) inside.push_back(i);
    std::vector<int> maximal;
    for (int i : inside) {
      bool is_max = true;
      for (int j : inside)
        if (j != i && poset.leq(i, j)) {
          is_max = false;
          break;
        }
      if (is_max) maximal.push_back(i);
    }
    for (int m : maximal) {
      if (poset.height(m) != poset.height(maximal.front())) {
        heights.ok = false;
        heights.at = a;
        heights.first = maximal.front();
        heights.second = m;
        break;
      }
    }
    if (!heights.ok) break;
  }
  report.heights = heights;
  report.ok = heights.ok;
  return report;
}

}  // namespace hmat
