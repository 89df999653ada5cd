#include "o1p/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>

namespace o1p {

bool OuterDrawing::has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    const auto& na = adj[a];
    return std::binary_search(na.begin(), na.end(), b);
}

int OuterDrawing::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges.begin());
}

bool edges_cross(const Edge& e, const Edge& f) {
    if (e.adjacent_to(f)) return false;
    // e.u < e.v; f crosses e iff exactly one endpoint of f lies strictly
    // inside the arc (e.u, e.v).
    bool c_in = e.u < f.u && f.u < e.v;
    bool d_in = e.u < f.v && f.v < e.v;
    return c_in != d_in;
}

bool is_boundary_edge(const Edge& e, int n) {
    int diff = e.v - e.u;
    return diff == 1 || diff == n - 1;
}

OuterDrawing build_drawing(int n, const std::vector<Edge>& input) {
    if (n < 1) throw graph_error(GraphError::vertex_out_of_range, "vertex count must be >= 1");
    OuterDrawing d;
    d.n = n;
    d.edges.reserve(input.size());
    for (const Edge& e : input) {
        if (e.u < 0 || e.v >= n)
            throw graph_error(GraphError::vertex_out_of_range,
                              "edge endpoint out of range: " + e.key());
        if (e.u == e.v) throw graph_error(GraphError::self_loop, "self loop at " + std::to_string(e.u));
        d.edges.push_back(e);
    }
    std::sort(d.edges.begin(), d.edges.end());
    auto dup = std::adjacent_find(d.edges.begin(), d.edges.end());
    if (dup != d.edges.end())
        throw graph_error(GraphError::duplicate_edge, "duplicate edge " + dup->key());
    d.adj.assign(n, {});
    for (const Edge& e : d.edges) {
        d.adj[e.u].push_back(e.v);
        d.adj[e.v].push_back(e.u);
    }
    for (auto& nb : d.adj) std::sort(nb.begin(), nb.end());
    return d;
}

std::vector<Crossing> compute_crossings(const OuterDrawing& d) {
    std::vector<Crossing> out;
    const auto& es = d.edges;
    for (size_t i = 0; i < es.size(); ++i) {
        if (is_boundary_edge(es[i], d.n)) continue;
        for (size_t j = i + 1; j < es.size(); ++j) {
            if (is_boundary_edge(es[j], d.n)) continue;
            if (!edges_cross(es[i], es[j])) continue;
            Crossing c;
            c.a = es[i];
            c.b = es[j];
            c.endpoints = {es[i].u, es[i].v, es[j].u, es[j].v};
            std::sort(c.endpoints.begin(), c.endpoints.end());
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PlanarityReport validate_outer1planarity(const OuterDrawing& d) {
    PlanarityReport rep;
    std::vector<int> count(d.edges.size(), 0);
    for (const Crossing& c : compute_crossings(d)) {
        count[d.edge_index(c.a)]++;
        count[d.edge_index(c.b)]++;
    }
    for (size_t i = 0; i < count.size(); ++i) {
        if (count[i] >= 2) rep.offending.push_back(d.edges[i]);
    }
    rep.ok = rep.offending.empty();
    return rep;
}

int graph_distance(const OuterDrawing& d, Vertex u, Vertex w) {
    if (u < 0 || u >= d.n || w < 0 || w >= d.n)
        throw graph_error(GraphError::vertex_out_of_range, "distance query out of range");
    if (u == w) return 0;
    std::vector<int> dist(d.n, kUnreachable);
    std::deque<Vertex> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex x : d.adj[v]) {
            if (dist[x] != kUnreachable) continue;
            dist[x] = dist[v] + 1;
            if (x == w) return dist[x];
            queue.push_back(x);
        }
    }
    return kUnreachable;
}

std::optional<int> crossing_distance(const OuterDrawing& d) {
    auto rep = validate_outer1planarity(d);
    if (!rep.ok)
        throw graph_error(GraphError::not_outer1planar, "drawing is not outer-1-plane");
    auto crossings = compute_crossings(d);
    if (crossings.size() <= 1) return std::nullopt;
    // Multi-source BFS from each crossing's endpoint set, then min over pairs.
    std::vector<std::vector<int>> dist;
    dist.reserve(crossings.size());
    for (const Crossing& c : crossings) {
        std::vector<int> dv(d.n, kUnreachable);
        std::deque<Vertex> queue;
        for (Vertex s : c.endpoints) {
            if (dv[s] == kUnreachable) {
                dv[s] = 0;
                queue.push_back(s);
            }
        }
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex x : d.adj[v]) {
                if (dv[x] != kUnreachable) continue;
                dv[x] = dv[v] + 1;
                queue.push_back(x);
            }
        }
        dist.push_back(std::move(dv));
    }
    std::optional<int> best;
    for (size_t i = 0; i < crossings.size(); ++i) {
        for (size_t j = i + 1; j < crossings.size(); ++j) {
            for (Vertex s : crossings[j].endpoints) {
                int dd = dist[i][s];
                if (dd == kUnreachable) continue;
                if (!best || dd < *best) best = dd;
            }
        }
    }
    return best ? best : std::nullopt;
}

DegreeStats degree_stats(const OuterDrawing& d) {
    DegreeStats s;
    if (d.n == 0) return s;
    s.min_degree = d.degree(0);
    for (Vertex v = 0; v < d.n; ++v) {
        s.max_degree = std::max(s.max_degree, d.degree(v));
        s.min_degree = std::min(s.min_degree, d.degree(v));
    }
    return s;
}

bool is_two_connected(const OuterDrawing& d) {
    if (d.n < 3) return false;
    // Hopcroft-Tarjan articulation point search; also requires connectivity.
    std::vector<int> num(d.n, -1), low(d.n, 0);
    int timer = 0;
    bool has_cut = false;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        num[v] = low[v] = timer++;
        int children = 0;
        for (Vertex x : d.adj[v]) {
            if (x == parent) {
                parent = -2;  // skip the tree edge once; parallel edges are impossible
                continue;
            }
            if (num[x] == -1) {
                children++;
                dfs(x, v);
                low[v] = std::min(low[v], low[x]);
                if (parent != -1 && low[x] >= num[v]) has_cut = true;
            } else {
                low[v] = std::min(low[v], num[x]);
            }
        }
        if (parent == -1 && children > 1) has_cut = true;
    };
    dfs(0, -1);
    for (Vertex v = 0; v < d.n; ++v)
        if (num[v] == -1) return false;
    return !has_cut;
}

std::vector<std::vector<Vertex>> connected_components(const OuterDrawing& d) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<bool> seen(d.n, false);
    for (Vertex s = 0; s < d.n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (Vertex x : d.adj[v]) {
                if (!seen[x]) {
                    seen[x] = true;
                    queue.push_back(x);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::string to_dot(const OuterDrawing& d, const std::vector<int>* edge_colors) {
    static const char* palette[] = {"red",    "blue",   "forestgreen", "orange",
                                    "purple", "brown",  "deeppink",    "cadetblue"};
    std::string out = "graph G {\n  layout=neato;\n  node [shape=circle];\n";
    char buf[128];
    const double pi = 3.14159265358979323846;
    for (Vertex v = 0; v < d.n; ++v) {
        // clockwise placement starting at 12 o'clock
        double angle = pi / 2 - 2 * pi * v / std::max(1, d.n);
        std::snprintf(buf, sizeof(buf), "  %d [pos=\"%.4f,%.4f!\"];\n", v, 2.0 * std::cos(angle),
                      2.0 * std::sin(angle));
        out += buf;
    }
    for (size_t i = 0; i < d.edges.size(); ++i) {
        const Edge& e = d.edges[i];
        int c = edge_colors && i < edge_colors->size() ? (*edge_colors)[i] : -1;
        if (c >= 0) {
            std::snprintf(buf, sizeof(buf), "  %d -- %d [label=\"%d\", color=%s];\n", e.u, e.v, c,
                          palette[c % 8]);
        } else {
            std::snprintf(buf, sizeof(buf), "  %d -- %d;\n", e.u, e.v);
        }
        out += buf;
    }
    out += "}\n";
    return out;
}

}  // namespace o1p
