#pragma once

#include "hmat/hmatroid.hpp"
#include "hmat/rank.hpp"
#include "hmat/submodular.hpp"

// Straightforward single-threaded implementations of the parallel kernels.
// Kept as the comparison baseline for tests and the benchmark target.
namespace hmat::serial {

RankTable rank_from_family(const SetFamily& family);

ExtensionCheck satisfies_extension_property(const RankTable& rho, const HSpec& h);

QuadrupleCheck rank_quadruple_submodularity(const RankTable& rho, const HSpec& h);

HSubmodularCheck is_h_submodular(const ValuedSetFunction& f, const HSpec& h);

PolymatroidCheck is_polymatroid(const ValuedSetFunction& f);

// Filters all of 2^E instead of expanding member power sets.
SetFamily downward_closure(const SetFamily& family);

}  // namespace hmat::serial
