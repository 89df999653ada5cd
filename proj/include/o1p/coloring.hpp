#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "o1p/graph.hpp"

namespace o1p {

using Color = int;

// Per-edge color lists keyed by normalized edge.
using ListAssignment = std::map<Edge, std::vector<Color>>;
// Proper coloring keyed by normalized edge.
using EdgeColoring = std::map<Edge, Color>;

// A coloring instance over an explicit edge set.  Adjacency is the line
// graph restricted to these edges.
struct ColoringProblem {
    std::vector<Edge> edges;                 // fixed order
    std::vector<std::vector<int>> adjacent;  // indices into edges
    std::vector<std::vector<Color>> lists;   // sorted, unique

    static ColoringProblem from(const std::vector<Edge>& edges, const ListAssignment& lists);
};

struct SearchStats {
    std::uint64_t nodes = 0;
};

// Exhaustive backtracking list edge coloring extending `coloring`
// (-1 = uncolored).  Deterministic: picks the uncolored edge with the
// fewest remaining colors (ties by lowest index), colors ascending.
// Returns false iff no proper extension exists.
bool backtrack_color(const ColoringProblem& p, std::vector<Color>& coloring,
                     SearchStats* stats = nullptr);

// A(e): colors of L(e) not used on colored adjacent edges.
std::vector<Color> available_colors(const ColoringProblem& p, const std::vector<Color>& coloring,
                                    int edge_idx);

struct ColoringViolation {
    enum Kind { adjacent_same_color, color_not_in_list, missing_edge } kind;
    Edge a, b;  // b unused for the two edge-local kinds
    std::string describe() const;
};

// Properness plus, when lists are given, list membership; `coloring`
// must cover every edge of d.
std::vector<ColoringViolation> check_coloring(const OuterDrawing& d, const ListAssignment* lists,
                                              const EdgeColoring& coloring);

inline constexpr int kChromaticIndexEdgeGuard = 16;

// Smallest k with a proper edge k-coloring, by backtracking over identical
// lists {0..k-1}.  Throws GraphError::too_large past the edge guard.
int brute_force_chromatic_index(const OuterDrawing& d);

// Convenience: lists with every edge of d mapped to {0..k-1}.
ListAssignment uniform_lists(const OuterDrawing& d, int k);

}  // namespace o1p
