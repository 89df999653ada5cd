#include "o1p/solver.hpp"

#include <algorithm>
#include <set>

namespace o1p {

namespace {

struct Workspace {
    const OuterDrawing* d;
    std::vector<bool> alive;                          // per edge index
    std::vector<int> deg;                             // alive degree
    std::vector<std::vector<std::pair<Vertex, int>>> incident;  // (neighbor, edge idx)

    explicit Workspace(const OuterDrawing& dd) : d(&dd) {
        alive.assign(dd.edges.size(), true);
        deg.assign(dd.n, 0);
        incident.assign(dd.n, {});
        for (size_t i = 0; i < dd.edges.size(); ++i) {
            const Edge& e = dd.edges[i];
            incident[e.u].emplace_back(e.v, static_cast<int>(i));
            incident[e.v].emplace_back(e.u, static_cast<int>(i));
            deg[e.u]++;
            deg[e.v]++;
        }
    }

    void remove(int idx) {
        alive[idx] = false;
        deg[d->edges[idx].u]--;
        deg[d->edges[idx].v]--;
    }

    HostGraph component_host(const std::vector<Vertex>& comp) const {
        HostGraph h;
        h.n = d->n;
        h.adj.assign(d->n, {});
        for (Vertex v : comp) {
            for (const auto& [w, idx] : incident[v])
                if (alive[idx]) h.adj[v].push_back(w);
            std::sort(h.adj[v].begin(), h.adj[v].end());
        }
        return h;
    }
};

// Colors already used next to an uncolored host edge.
std::vector<Color> residual_list(const OuterDrawing& d, const ListAssignment& lists,
                                 const EdgeColoring& coloring, const Edge& e) {
    std::vector<Color> avail;
    const auto& base = lists.at(e);
    for (Color c : base) {
        bool used = false;
        for (Vertex endpoint : {e.u, e.v}) {
            for (Vertex w : d.adj[endpoint]) {
                Edge f(endpoint, w);
                if (f == e) continue;
                auto it = coloring.find(f);
                if (it != coloring.end() && it->second == c) {
                    used = true;
                    break;
                }
            }
            if (used) break;
        }
        if (!used) avail.push_back(c);
    }
    return avail;
}

}  // namespace

SolverOutcome color_outer1planar(const OuterDrawing& d, const ListAssignment& lists,
                                 const Catalog& catalog) {
    auto precondition = [&](const std::string& msg) {
        return SolverFailure{SolverFailureKind::precondition_violated, msg, {}, {}, {}};
    };
    if (!validate_outer1planarity(d).ok)
        return precondition("drawing is not outer-1-plane (an edge is crossed twice)");
    DegreeStats stats = degree_stats(d);
    if (stats.max_degree > 4)
        return precondition("max degree " + std::to_string(stats.max_degree) + " exceeds 4");
    for (const Edge& e : d.edges) {
        auto it = lists.find(e);
        if (it == lists.end()) return precondition("edge " + e.key() + " has no list");
        std::set<Color> distinct(it->second.begin(), it->second.end());
        if (distinct.size() < 4)
            return precondition("list of edge " + e.key() + " has fewer than 4 colors");
    }
    if (stats.max_degree == 4 && compute_crossings(d).size() >= 2) {
        auto theta = crossing_distance(d);
        if (theta && *theta < 3)
            return precondition("max degree 4 with crossing distance " + std::to_string(*theta) +
                                " < 3");
    }

    Workspace ws(d);
    std::vector<TraceStep> trace;
    SolverResult result;

    for (const auto& comp : connected_components(d)) {
        if (comp.size() == 1 && ws.deg[comp[0]] == 0) continue;  // isolated vertex

        size_t first_step = trace.size();
        // reduce until the component has no edges
        for (;;) {
            // pendant rule first: smallest vertex of degree exactly 1
            int pendant_vertex = -1;
            bool any_edge = false;
            for (Vertex v : comp) {
                if (ws.deg[v] >= 1) any_edge = true;
                if (ws.deg[v] == 1 && pendant_vertex == -1) pendant_vertex = v;
            }
            if (!any_edge) break;
            TraceStep step;
            if (pendant_vertex != -1) {
                int edge_idx = -1;
                for (const auto& [w, idx] : ws.incident[pendant_vertex])
                    if (ws.alive[idx]) edge_idx = idx;
                step.kind = TraceStep::Kind::pendant;
                step.pendant_edge = d.edges[edge_idx];
                step.removed_edges = {d.edges[edge_idx]};
                ws.remove(edge_idx);
            } else {
                HostGraph host = ws.component_host(comp);
                auto occ = find_first_occurrence(host, catalog);
                if (!occ) {
                    SolverFailure f;
                    f.kind = SolverFailureKind::no_configuration_found;
                    f.message = "no catalog configuration embeds in a reduced graph with min "
                                "degree >= 2";
                    f.residual_edges = host.edge_list();
                    return f;
                }
                step.kind = TraceStep::Kind::configuration;
                step.occurrence = occ;
                step.removed_edges = occ->removed_edges;
                for (const Edge& e : occ->removed_edges) ws.remove(d.edge_index(e));
            }
            trace.push_back(std::move(step));
        }

        // unwind this component: extend in reverse removal order
        for (size_t i = trace.size(); i-- > first_step;) {
            TraceStep& step = trace[i];
            ListAssignment avail;
            for (const Edge& e : step.removed_edges)
                avail[e] = residual_list(d, lists, result.coloring, e);
            ColoringProblem p = ColoringProblem::from(step.removed_edges, avail);
            std::vector<Color> colors(step.removed_edges.size(), -1);
            SearchStats search;
            if (!backtrack_color(p, colors, &search)) {
                SolverFailure f;
                f.kind = SolverFailureKind::extension_failed;
                f.message = "no extension over the removed edges of step " + std::to_string(i);
                f.occurrence = step.occurrence;
                f.residual_lists = avail;
                for (size_t j = 0; j < trace.size(); ++j)
                    for (const Edge& e : trace[j].removed_edges) f.residual_edges.push_back(e);
                return f;
            }
            step.search_nodes = search.nodes;
            result.stats.total_extension_nodes += search.nodes;
            result.stats.max_extension_nodes =
                std::max(result.stats.max_extension_nodes, search.nodes);
            for (size_t j = 0; j < step.removed_edges.size(); ++j) {
                step.extension[step.removed_edges[j]] = colors[j];
                result.coloring[step.removed_edges[j]] = colors[j];
            }
        }
    }

    result.trace = std::move(trace);
    result.stats.steps = static_cast<int>(result.trace.size());
    return result;
}

std::optional<TraceViolation> verify_trace(const OuterDrawing& d, const ListAssignment* lists,
                                           const SolverResult& result) {
    auto violation = [](int step, const std::string& msg) {
        return std::optional<TraceViolation>({step, msg});
    };
    Workspace ws(d);
    const Catalog& catalog = builtin_catalog();
    for (size_t i = 0; i < result.trace.size(); ++i) {
        const TraceStep& step = result.trace[i];
        for (const Edge& e : step.removed_edges) {
            int idx = d.edge_index(e);
            if (idx < 0) return violation(static_cast<int>(i), "unknown edge " + e.key());
            if (!ws.alive[idx])
                return violation(static_cast<int>(i), "edge " + e.key() + " removed twice");
        }
        if (step.kind == TraceStep::Kind::pendant) {
            if (step.removed_edges.size() != 1 || !(step.removed_edges[0] == step.pendant_edge))
                return violation(static_cast<int>(i), "pendant step must remove its single edge");
            const Edge& e = step.pendant_edge;
            if (ws.deg[e.u] != 1 && ws.deg[e.v] != 1)
                return violation(static_cast<int>(i), "pendant edge has no degree-1 endpoint");
        } else {
            if (!step.occurrence)
                return violation(static_cast<int>(i), "configuration step lacks an occurrence");
            // degrees must be checked against the graph state at this step
            std::vector<Vertex> everything(d.n);
            for (Vertex v = 0; v < d.n; ++v) everything[v] = v;
            HostGraph host = ws.component_host(everything);
            std::string why;
            if (!validate_occurrence(host, catalog, *step.occurrence, &why))
                return violation(static_cast<int>(i), "occurrence invalid: " + why);
            if (step.occurrence->removed_edges != step.removed_edges)
                return violation(static_cast<int>(i), "removed edges disagree with occurrence");
        }
        std::set<Edge> in_extension;
        for (const auto& [e, c] : step.extension) in_extension.insert(e);
        std::set<Edge> removed_set(step.removed_edges.begin(), step.removed_edges.end());
        if (in_extension != removed_set)
            return violation(static_cast<int>(i), "extension does not cover the removed edges");
        for (const Edge& e : step.removed_edges) ws.remove(d.edge_index(e));
    }
    for (size_t idx = 0; idx < d.edges.size(); ++idx)
        if (ws.alive[idx]) return violation(-1, "trace does not exhaust the graph");
    // assembled coloring must match the union of the extensions
    EdgeColoring assembled;
    for (const TraceStep& step : result.trace)
        for (const auto& [e, c] : step.extension) assembled[e] = c;
    if (assembled != result.coloring) return violation(-1, "coloring differs from trace extensions");
    auto violations = check_coloring(d, lists, result.coloring);
    if (!violations.empty()) return violation(-1, violations.front().describe());
    return std::nullopt;
}

AuditReport audit_structure(int n_min, int n_max, const EnumFilters& filters,
                            const Catalog& catalog, bool force) {
    AuditReport rep;
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.filters = filters;
    for (int n = n_min; n <= n_max; ++n) {
        enumerate_drawings(
            n, filters,
            [&](const OuterDrawing& d) {
                rep.drawings_checked++;
                auto occ = find_first_occurrence(HostGraph::from(d), catalog);
                if (occ)
                    rep.matched[occ->config_id]++;
                else
                    rep.failures.push_back({d});
                return true;
            },
            force);
    }
    return rep;
}

}  // namespace o1p
