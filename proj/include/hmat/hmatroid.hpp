#pragma once

#include <optional>
#include <string>

#include "hmat/hspec.hpp"
#include "hmat/rank.hpp"

namespace hmat {

struct AxiomICheck {
  bool ok = false;
  subset_t h = 0;  // member of H where no independent set attains the rank
};

struct AxiomMCheck {
  bool ok = false;
  subset_t h = 0;     // member of H
  subset_t base = 0;  // base of the restriction with the wrong cardinality
};

struct QuadrupleCheck {
  bool ok = false;
  subset_t h1 = 0, h2 = 0, g1 = 0, g2 = 0;
};

struct HMatroidReport {
  ConstructibleCheck constructible;
  std::optional<AxiomICheck> axiom_i;  // run only when (C) holds
  std::optional<AxiomMCheck> axiom_m;  // run only when (I) holds
  bool ok = false;
  std::string failure;  // rendered first failing axiom and witness, empty when ok

  const std::string& describe_failure() const { return failure; }
};

// Axiom (I): each H in h contains a member of cardinality rank(H), where rank
// is the family's own rank function. Requires a constructible family.
AxiomICheck satisfies_axiom_i(const SetFamily& family, const HSpec& h);

// Axiom (M): for each H in h, every base of the restriction to H has
// cardinality rank(H). Requires a constructible family.
AxiomMCheck satisfies_axiom_m(const SetFamily& family, const HSpec& h);

// (C) then (I) then (M), stopping at the first failure.
HMatroidReport is_h_matroid(const SetFamily& family, const HSpec& h);

// For all H1, H2, G1, G2 in h with H1 within H2, H1 within G1 ^ G2 and
// H2 within G1 v G2: rho(H1) + rho(H2) <= rho(G1) + rho(G2).
QuadrupleCheck rank_quadruple_submodularity(const RankTable& rho, const HSpec& h);

}  // namespace hmat
