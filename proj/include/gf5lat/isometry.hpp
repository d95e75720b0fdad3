#pragma once

#include <cstdint>

#include "gf5lat/lattice.hpp"

namespace gf5lat {

enum class IsometryResult { isomorphic, not_isomorphic, inconclusive };

/* decides whether two lattices carry the same quadratic form, i.e. whether
   some linear map sends one onto the other preserving all inner products;
   denominators may differ, the forms are compared after exact rescaling.

   the search maps a spanning set of short vectors onto product-compatible
   images, pruned by iterated inner-product fingerprints; a candidate found
   by the search is verified exactly before `isomorphic` is returned, and
   `not_isomorphic` is only returned once the pruned search space is
   exhausted.  `inconclusive` reports that the search gave up after
   node_budget candidate evaluations and means neither of the other two */
IsometryResult is_isomorphic(const IntegerLattice& a, const IntegerLattice& b,
                             std::uint64_t node_budget = 100000000);

}  // namespace gf5lat
