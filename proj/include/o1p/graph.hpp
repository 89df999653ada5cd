#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace o1p {

using Vertex = int;

// Undirected edge, kept normalized with u < v.
struct Edge {
    Vertex u = -1, v = -1;
    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
    bool touches(Vertex w) const { return u == w || v == w; }
    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool adjacent_to(const Edge& e) const {
        return u == e.u || u == e.v || v == e.u || v == e.v;
    }
    std::string key() const { return std::to_string(u) + "-" + std::to_string(v); }
};

enum class GraphError {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    not_outer1planar,
    too_large,
};

struct graph_error : std::runtime_error {
    GraphError code;
    graph_error(GraphError c, const std::string& what) : std::runtime_error(what), code(c) {}
};

// An outer-1-plane drawing: vertices 0..n-1 sit on a circle in clockwise
// order, so the drawing is fully determined by the cyclic order plus the
// edge set.  Two chords cross exactly when their endpoints interleave.
class OuterDrawing {
  public:
    OuterDrawing() = default;
    int n = 0;
    std::vector<Edge> edges;                    // sorted, unique
    std::vector<std::vector<Vertex>> adj;       // sorted neighbor lists

    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(Vertex a, Vertex b) const;
    int edge_index(const Edge& e) const;        // -1 if absent
    int num_edges() const { return static_cast<int>(edges.size()); }
};

struct Crossing {
    Edge a, b;                                  // a < b
    std::array<Vertex, 4> endpoints;            // sorted M(c)
    auto operator<=>(const Crossing&) const = default;
};

// True when chords e and f strictly interleave on the boundary circle.
bool edges_cross(const Edge& e, const Edge& f);

// Boundary edge (cyclically consecutive endpoints) vs chord.
bool is_boundary_edge(const Edge& e, int n);

// Throws graph_error on self loops, duplicates or out-of-range endpoints.
// Does not check outer-1-planarity; see validate_outer1planarity.
OuterDrawing build_drawing(int n, const std::vector<Edge>& edges);

// All crossings, sorted.
std::vector<Crossing> compute_crossings(const OuterDrawing& d);

struct PlanarityReport {
    bool ok = true;
    std::vector<Edge> offending;                // edges crossed twice or more
};
PlanarityReport validate_outer1planarity(const OuterDrawing& d);

inline constexpr int kUnreachable = -1;

// BFS edge-count distance; kUnreachable across components.
int graph_distance(const OuterDrawing& d, Vertex u, Vertex w);

// Crossing distance of the drawing: min over unordered pairs of distinct
// crossings of the min vertex-to-vertex distance between their endpoint
// sets.  nullopt encodes infinity (at most one crossing, or no finite
// distance between any pair).
std::optional<int> crossing_distance(const OuterDrawing& d);

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
};
DegreeStats degree_stats(const OuterDrawing& d);

bool is_two_connected(const OuterDrawing& d);

// Components as vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const OuterDrawing& d);

// DOT text with vertices on a circle; optional per-edge color labels
// (parallel to d.edges, -1 = unlabeled).
std::string to_dot(const OuterDrawing& d, const std::vector<int>* edge_colors = nullptr);

}  // namespace o1p
