#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hmat/hspec.hpp"

namespace hmat {

// All function values and vector coordinates are exact rationals; membership
// in the base polyhedron needs exact equality, so no floating point anywhere.
using Rational = boost::rational<long long>;

// Accepts "p", "-p", "p/q" with nonzero q.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& value);

struct LatticeCheck {
  enum class Fail { none, missing_empty, missing_full, union_missing, intersection_missing };
  bool ok = false;
  Fail why = Fail::none;
  subset_t x = 0, y = 0;  // violating pair for the two closure failures
};

// Contains the empty set and E, and is closed under pairwise union and
// intersection. The witness is the first failing pair in canonical order.
LatticeCheck is_distributive_lattice_family(const SetFamily& family);

// A set family validated to be a distributive lattice.
class LatticeFamily {
 public:
  explicit LatticeFamily(SetFamily family);

  const SetFamily& family() const { return family_; }
  const GroundSet& ground() const { return family_.ground(); }
  std::span<const subset_t> members() const { return family_.members(); }
  bool is_power_set() const {
    return family_.size() == family_.ground().subset_count();
  }

 private:
  SetFamily family_;
};

// A function D -> Q with exactly one value per domain member.
class ValuedSetFunction {
 public:
  ValuedSetFunction(LatticeFamily domain, std::vector<Rational> values);

  const LatticeFamily& domain() const { return domain_; }
  const GroundSet& ground() const { return domain_.ground(); }
  Rational value(subset_t s) const;  // s must be a domain member
  const std::vector<Rational>& values() const { return values_; }

 private:
  LatticeFamily domain_;
  std::vector<Rational> values_;  // parallel to domain members
};

struct HSubmodularCheck {
  bool ok = false;
  subset_t x = 0, y = 0, h1 = 0, h2 = 0;
  Rational violation;  // f(H1) + f(H2) - f(X) - f(Y), maximal over violations
};

// Early-exit boolean form of the (S) check.
bool satisfies_h_submodular(const ValuedSetFunction& f, const HSpec& h);

// Full (S) check. On failure reports the maximally violated quadruple,
// ties broken by the smallest (X, Y, H1, H2) code tuple.
HSubmodularCheck is_h_submodular(const ValuedSetFunction& f, const HSpec& h);

struct PolymatroidCheck {
  bool ok = false;
  int condition = 0;      // 1 = normalized, 2 = monotone, 3 = submodular
  subset_t x = 0, y = 0;  // witness sets for conditions 2 and 3
};

// Normalized, monotone (single-element steps) and submodular (all pairs).
// The domain must be the full power set.
PolymatroidCheck is_polymatroid(const ValuedSetFunction& f);

enum class PropCheckMode { exhaustive, witness };

struct PolymatroidEquivalenceReport {
  PropCheckMode mode = PropCheckMode::exhaustive;
  PolymatroidCheck polymatroid;
  bool all_h_pass = false;
  std::optional<SetFamily> failing_h;
  std::optional<HSubmodularCheck> s_witness;
  bool equivalent = false;  // polymatroid verdict matches the (S) conjunction
};

// Compares is_polymatroid against H-submodularity over constraint families.
// Exhaustive mode sweeps every family containing the empty set and E
// (requires n <= 3); witness mode checks the full power set plus the
// three-member families {empty, X, E}.
PolymatroidEquivalenceReport polymatroid_equivalence_check(
    const ValuedSetFunction& f, PropCheckMode mode);

// A point of Q^E indexed by ground-set element.
class RationalVector {
 public:
  RationalVector(GroundSet ground, std::vector<Rational> coords);

  const GroundSet& ground() const { return ground_; }
  const Rational& coord(int element) const { return coords_.at(element); }
  const std::vector<Rational>& coords() const { return coords_; }
  Rational sum_over(subset_t s) const;

 private:
  GroundSet ground_;
  std::vector<Rational> coords_;
};

struct PolyhedronCheck {
  bool ok = false;
  subset_t set = 0;   // maximally violated constraint, smallest code on ties
  Rational excess;    // x(set) - f(set)
};

// x(X) <= f(X) for every domain member X.
PolyhedronCheck in_submodular_polyhedron(const RationalVector& x,
                                         const ValuedSetFunction& f);

struct BasePolyhedronCheck {
  bool ok = false;
  PolyhedronCheck polyhedron;
  bool total_matches = false;
  Rational total;     // x(E)
  Rational required;  // f(E)
};

// Membership in P(f) with x(E) = f(E) exactly.
BasePolyhedronCheck in_base_polyhedron(const RationalVector& x,
                                       const ValuedSetFunction& f);

}  // namespace hmat
