#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "o1p/coloring.hpp"
#include "o1p/graph.hpp"

namespace o1p {

struct generation_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneratorConfig {
    int n = 10;
    std::uint64_t seed = 0;
    int crossings_min = 0;
    int crossings_max = 0;
    double chord_density = 0.3;     // extra non-crossing chords per vertex, roughly
    bool require_theta3 = true;     // crossing distance at least 3 (or infinite)
    int delta_cap = 4;
    int retry_budget = 10000;
};

// Boundary-cycle skeleton, well-separated tight crossing pairs, then short
// non-crossing chords under the degree cap; rejection-checked against the
// requested flags.  Deterministic in cfg.seed.
OuterDrawing random_instance(const GeneratorConfig& cfg);

struct EnumFilters {
    int delta_max = 4;
    int delta_min = 0;
    bool two_connected = false;
    int theta_min = 0;       // 0 = no constraint; satisfied by infinite distance
    int crossings_min = 0;
};

inline constexpr int kEnumerationGuard = 8;

// All outer-1-plane drawings on n cyclically ordered vertices passing the
// filters, one representative per dihedral relabeling class, deterministic
// order.  Visitor returns false to stop.  Guarded at n <= 8 unless forced.
void enumerate_drawings(int n, const EnumFilters& filters,
                        const std::function<bool(const OuterDrawing&)>& visit, bool force = false);

std::uint64_t count_drawings(int n, const EnumFilters& filters, bool force = false);

// Minimum serialization over the 2n rotations/reflections of the boundary
// order; equal strings exactly for dihedrally equivalent drawings.
std::string canonical_form(const OuterDrawing& d);
std::string serialize_drawing(const OuterDrawing& d);

// Uniform independent size-`list_size` subsets of {0..palette-1} per edge.
ListAssignment random_lists(const OuterDrawing& d, int list_size, int palette, std::uint64_t seed);

}  // namespace o1p
