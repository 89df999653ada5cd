#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "o1p/coloring.hpp"

namespace o1p {

struct cap_too_small : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumerates list assignments with the given per-edge list sizes over at
// most `palette_cap` colors, one representative per orbit under color
// bijection.
//
// A color is interchangeable with any other color that appears in exactly
// the same lists, so an orbit is determined by the multiset of color
// signatures (the set of edges whose list contains the color).  We walk
// signatures as bitmasks in strictly decreasing order with multiplicities,
// which yields every orbit exactly once; representative color ids are
// numbered in walk order.  The visitor receives per-edge color masks over
// bits 0..colors_used-1 and may return false to stop.  Returns the number
// of assignments visited.
std::uint64_t enumerate_canonical_assignments(
    const std::vector<int>& sizes, int palette_cap,
    const std::function<bool(const std::vector<std::uint32_t>& edge_masks, int colors_used)>& visit);

std::uint64_t count_canonical_assignments(const std::vector<int>& sizes, int palette_cap);

// Mask form -> concrete lists on named edges (parallel to `edges`).
ListAssignment masks_to_lists(const std::vector<Edge>& edges,
                              const std::vector<std::uint32_t>& edge_masks);

}  // namespace o1p
