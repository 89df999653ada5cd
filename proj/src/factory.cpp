#include "o1p/factory.hpp"

#include <algorithm>

#include "o1p/rng.hpp"

namespace o1p {

namespace {

std::vector<Edge> boundary_cycle(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return edges;
}

int cyclic_gap(int a, int b, int n) {
    int d = (b - a) % n;
    if (d < 0) d += n;
    return d;
}

}  // namespace

OuterDrawing random_instance(const GeneratorConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("generator needs n >= 3");
    Rng rng(cfg.seed);
    for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
        std::vector<Edge> edges = boundary_cycle(cfg.n);
        std::vector<int> deg(cfg.n, 2);
        auto present = [&](Edge e) { return std::find(edges.begin(), edges.end(), e) != edges.end(); };

        // tight crossing pairs at pairwise well-separated windows; a window
        // at s uses vertices s..s+3 with chords (s,s+2) and (s+1,s+3)
        int want = cfg.crossings_min == cfg.crossings_max
                       ? cfg.crossings_min
                       : rng.range(cfg.crossings_min, cfg.crossings_max);
        std::vector<int> starts;
        bool placed_all = true;
        for (int c = 0; c < want; ++c) {
            bool placed = false;
            for (int tries = 0; tries < 64 && !placed; ++tries) {
                int s = static_cast<int>(rng.bounded(cfg.n));
                bool ok = cfg.n >= 7 * (c + 1);
                for (int other : starts) {
                    // every vertex of one window at least 4 boundary steps
                    // from every vertex of the other
                    for (int a = s; a <= s + 3 && ok; ++a) {
                        for (int b = other; b <= other + 3 && ok; ++b) {
                            int fwd = cyclic_gap(a, b, cfg.n);
                            if (std::min(fwd, cfg.n - fwd) < 4) ok = false;
                        }
                    }
                }
                if (ok) {
                    starts.push_back(s);
                    placed = true;
                }
            }
            if (!placed) placed_all = false;
        }
        if (!placed_all) continue;
        for (int s : starts) {
            Edge c1(s, (s + 2) % cfg.n), c2((s + 1) % cfg.n, (s + 3) % cfg.n);
            edges.push_back(c1);
            edges.push_back(c2);
            for (Vertex v : {c1.u, c1.v, c2.u, c2.v}) deg[v]++;
        }

        // short non-crossing chords under the degree cap
        int extra = static_cast<int>(cfg.n * cfg.chord_density);
        for (int t = 0; t < extra; ++t) {
            int i = static_cast<int>(rng.bounded(cfg.n));
            int span = 2 + static_cast<int>(rng.bounded(2));
            if (span >= cfg.n - 1) continue;
            Edge cand(i, (i + span) % cfg.n);
            if (cand.u == cand.v || present(cand)) continue;
            if (deg[cand.u] >= cfg.delta_cap || deg[cand.v] >= cfg.delta_cap) continue;
            bool crosses = false;
            for (const Edge& e : edges) {
                if (!is_boundary_edge(e, cfg.n) && edges_cross(cand, e)) crosses = true;
            }
            if (crosses) continue;
            // interior vertices of the skipped arc lose nothing, but their
            // degree cap must still allow the chord's endpoints
            edges.push_back(cand);
            deg[cand.u]++;
            deg[cand.v]++;
        }

        OuterDrawing d = build_drawing(cfg.n, edges);
        if (!validate_outer1planarity(d).ok) continue;
        if (degree_stats(d).max_degree > cfg.delta_cap) continue;
        if (static_cast<int>(compute_crossings(d).size()) != want) continue;
        if (cfg.require_theta3) {
            auto theta = crossing_distance(d);
            if (theta && *theta < 3) continue;
        }
        return d;
    }
    throw generation_exhausted("retry budget exhausted for seed " + std::to_string(cfg.seed));
}

std::string serialize_drawing(const OuterDrawing& d) {
    std::string s = "n" + std::to_string(d.n) + ":";
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (i) s += ",";
        s += d.edges[i].key();
    }
    return s;
}

std::string canonical_form(const OuterDrawing& d) {
    std::string best;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int shift = 0; shift < d.n; ++shift) {
            std::vector<Edge> mapped;
            mapped.reserve(d.edges.size());
            for (const Edge& e : d.edges) {
                auto apply = [&](Vertex v) {
                    int w = reflect ? (shift - v) % d.n : (v + shift) % d.n;
                    if (w < 0) w += d.n;
                    return w;
                };
                mapped.emplace_back(apply(e.u), apply(e.v));
            }
            std::sort(mapped.begin(), mapped.end());
            std::string s = "n" + std::to_string(d.n) + ":";
            for (size_t i = 0; i < mapped.size(); ++i) {
                if (i) s += ",";
                s += mapped[i].key();
            }
            if (best.empty() || s < best) best = std::move(s);
        }
    }
    return best;
}

namespace {

struct EnumState {
    int n;
    EnumFilters filters;
    const std::function<bool(const OuterDrawing&)>* visit;
    std::vector<Edge> all_edges;     // lex order
    std::vector<Edge> chosen;
    std::vector<int> deg;
    std::vector<int> crossed;        // per chosen edge: how often it is crossed
    bool stopped = false;

    bool leaf() {
        OuterDrawing d = build_drawing(n, chosen);
        if (degree_stats(d).min_degree < filters.delta_min) return true;
        if (filters.two_connected && !is_two_connected(d)) return true;
        auto crossings = compute_crossings(d);
        if (static_cast<int>(crossings.size()) < filters.crossings_min) return true;
        if (filters.theta_min > 0) {
            auto theta = crossing_distance(d);
            if (theta && *theta < filters.theta_min) return true;
        }
        if (canonical_form(d) != serialize_drawing(d)) return true;  // not the class representative
        if (!(*visit)(d)) stopped = true;
        return !stopped;
    }

    void rec(size_t idx) {
        if (stopped) return;
        if (idx == all_edges.size()) {
            leaf();
            return;
        }
        const Edge& e = all_edges[idx];
        // vertex u is settled once every edge touching it has been decided;
        // its minimum-degree requirement can then be checked early
        auto settled_check = [&](size_t next_idx) {
            if (filters.delta_min == 0) return true;
            // edges are lex sorted; vertex v is settled when the next edge's
            // smaller endpoint exceeds v
            int frontier = next_idx < all_edges.size() ? all_edges[next_idx].u : n;
            for (Vertex v = 0; v < frontier; ++v)
                if (deg[v] < filters.delta_min) return false;
            return true;
        };

        // skip the edge
        if (settled_check(idx + 1)) rec(idx + 1);
        if (stopped) return;

        // take the edge
        if (deg[e.u] >= filters.delta_max || deg[e.v] >= filters.delta_max) return;
        std::vector<int> hit;
        if (!is_boundary_edge(e, n)) {
            for (size_t j = 0; j < chosen.size(); ++j) {
                if (is_boundary_edge(chosen[j], n)) continue;
                if (!edges_cross(e, chosen[j])) continue;
                if (crossed[j] >= 1 || hit.size() >= 1) return;  // someone crossed twice
                hit.push_back(static_cast<int>(j));
            }
        }
        for (int j : hit) crossed[j]++;
        chosen.push_back(e);
        crossed.push_back(static_cast<int>(hit.size()));
        deg[e.u]++;
        deg[e.v]++;
        if (settled_check(idx + 1)) rec(idx + 1);
        deg[e.u]--;
        deg[e.v]--;
        chosen.pop_back();
        crossed.pop_back();
        for (int j : hit) crossed[j]--;
    }
};

}  // namespace

void enumerate_drawings(int n, const EnumFilters& filters,
                        const std::function<bool(const OuterDrawing&)>& visit, bool force) {
    if (n < 1) throw graph_error(GraphError::vertex_out_of_range, "n must be >= 1");
    if (n > kEnumerationGuard && !force)
        throw graph_error(GraphError::too_large,
                          "enumeration guarded at n <= " + std::to_string(kEnumerationGuard));
    EnumState st;
    st.n = n;
    st.filters = filters;
    st.visit = &visit;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) st.all_edges.emplace_back(u, v);
    st.deg.assign(n, 0);
    st.rec(0);
}

std::uint64_t count_drawings(int n, const EnumFilters& filters, bool force) {
    std::uint64_t count = 0;
    enumerate_drawings(
        n, filters,
        [&](const OuterDrawing&) {
            count++;
            return true;
        },
        force);
    return count;
}

ListAssignment random_lists(const OuterDrawing& d, int list_size, int palette, std::uint64_t seed) {
    if (palette < list_size)
        throw std::invalid_argument("palette smaller than the requested list size");
    Rng rng(seed);
    ListAssignment lists;
    for (const Edge& e : d.edges) lists[e] = rng.subset(palette, list_size);
    return lists;
}

}  // namespace o1p
