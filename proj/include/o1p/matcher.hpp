#pragma once

#include <optional>
#include <string>
#include <vector>

#include "o1p/catalog.hpp"
#include "o1p/graph.hpp"

namespace o1p {

// Abstract host for matching: the input drawing or a partially reduced
// graph inside the solver.  Geometry is irrelevant here; containment is a
// property of adjacencies and degrees only.
struct HostGraph {
    int n = 0;
    std::vector<std::vector<Vertex>> adj;  // sorted neighbor lists

    static HostGraph from(const OuterDrawing& d) { return {d.n, d.adj}; }
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(Vertex a, Vertex b) const;
    std::vector<Edge> edge_list() const;
};

struct Occurrence {
    std::string config_id;
    // In configuration vertex order.  Hollow images may coincide when the
    // configuration permits identification; solid images never do.
    std::vector<std::pair<std::string, Vertex>> vertex_map;
    std::vector<Edge> removed_edges;  // sorted host edges

    Vertex image(const std::string& name) const;
};

std::optional<Occurrence> find_first_occurrence(const HostGraph& host, const Catalog& catalog);

std::vector<Occurrence> enumerate_occurrences(const HostGraph& host, const Catalog& catalog,
                                              const std::string& config_id);

// Re-checks an occurrence from scratch: degree windows, pictured edges,
// distinctness and identification rules, and the removed-edge set.
bool validate_occurrence(const HostGraph& host, const Catalog& catalog, const Occurrence& occ,
                         std::string* why = nullptr);

}  // namespace o1p
