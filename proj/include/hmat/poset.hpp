#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hmat/ground.hpp"

namespace hmat {

// A finite poset with a unique minimum, stored as the full <= relation.
// Covers and heights are derived at construction.
class FinitePoset {
 public:
  // Builds from <= generator pairs over named elements. With
  // `transitive_close` the reflexive-transitive closure is taken first;
  // otherwise the given pairs (plus reflexivity) must already be transitively
  // closed. Violated order axioms are reported by name.
  static FinitePoset from_relation(std::vector<std::string> names,
                                   const std::vector<std::pair<int, int>>& leq_pairs,
                                   bool transitive_close);

  // The subsets of E ordered by inclusion; element index equals subset code.
  static FinitePoset boolean_lattice(const GroundSet& ground);

  int size() const { return size_; }
  int bottom() const { return bottom_; }
  const std::string& name(int x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  bool leq(int x, int y) const { return leq_[index(x, y)] != 0; }
  bool covers(int lower, int upper) const { return covers_[index(lower, upper)] != 0; }
  int height(int x) const { return heights_.at(x); }

  std::vector<int> interval(int x, int y) const;

 private:
  FinitePoset() = default;
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(y);
  }
  void derive_covers_and_heights();

  int size_ = 0;
  int bottom_ = 0;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<char> covers_;
  std::vector<int> heights_;
};

// A canonically ordered list of poset element indices.
class PosetSubset {
 public:
  PosetSubset() = default;
  PosetSubset(const FinitePoset& poset, std::vector<int> members);

  std::span<const int> members() const { return members_; }
  bool contains(int x) const;
  bool empty() const { return members_.empty(); }

 private:
  std::vector<int> members_;
};

struct AccessibleCheck {
  bool ok = false;
  int violator = -1;  // member with no covered member inside the family
};

struct HeightCheck {
  bool ok = false;
  int at = -1;          // the a in H where heights differ
  int first = -1;       // maximal member of family ^ [0, a]
  int second = -1;      // maximal member with a different height
};

struct SupermatroidReport {
  bool empty_family = false;  // the empty family contains no minimum
  AccessibleCheck accessible;
  std::optional<HeightCheck> heights;
  bool ok = false;
};

// Longest strict chain from the minimum to x.
int poset_height(const FinitePoset& poset, int x);

// Every non-minimum member covers some member of the family. A nonempty
// accessible family necessarily contains the minimum.
AccessibleCheck is_accessible(const FinitePoset& poset, const PosetSubset& family);

// max height over family members below x; the family must contain the minimum.
int poset_rank(const FinitePoset& poset, const PosetSubset& family, int x);

// Accessibility, plus equal heights of the maximal members of
// family ^ [0, a] for every a in h. Requires the minimum in h.
SupermatroidReport is_h_supermatroid(const FinitePoset& poset,
                                     const PosetSubset& family,
                                     const PosetSubset& h);

}  // namespace hmat
