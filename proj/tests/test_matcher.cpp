#include <doctest.h>

#include <functional>
#include <set>

#include "o1p/factory.hpp"
#include "o1p/matcher.hpp"
#include "o1p/rng.hpp"

using namespace o1p;

namespace {

OuterDrawing cycle(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return build_drawing(n, edges);
}

// Brute force over all vertex maps (allowing hollow coincidences), used as
// the matcher completeness oracle on small hosts.
bool naive_embeds(const HostGraph& host, const ConfigurationSpec& cfg) {
    int k = static_cast<int>(cfg.vertices.size());
    std::vector<Vertex> img(k, -1);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == k) {
            std::set<Edge> used;
            for (const auto& e : cfg.edges) {
                Vertex a = -1, b = -1;
                for (int j = 0; j < k; ++j) {
                    if (cfg.vertices[j].name == e.first) a = img[j];
                    if (cfg.vertices[j].name == e.second) b = img[j];
                }
                if (a == b || !host.has_edge(a, b)) return false;
                if (!used.insert(Edge(a, b)).second) return false;
            }
            std::map<Vertex, int> pictured;
            for (int j = 0; j < k; ++j) {
                int inc = 0;
                for (const auto& e : cfg.edges)
                    if (e.first == cfg.vertices[j].name || e.second == cfg.vertices[j].name) inc++;
                pictured[img[j]] += inc;
            }
            for (int j = 0; j < k; ++j) {
                const ConfigVertex& cv = cfg.vertices[j];
                int deg = host.degree(img[j]);
                if (cv.kind == VertexKind::solid) {
                    if (deg != cv.exact_deg) return false;
                } else {
                    if (deg < std::max(cv.min_deg, pictured[img[j]])) return false;
                    if (cv.max_deg != -1 && deg > cv.max_deg) return false;
                }
            }
            return true;
        }
        for (Vertex h = 0; h < host.n; ++h) {
            bool clash = false;
            for (int j = 0; j < i; ++j) {
                if (img[j] != h) continue;
                bool either_solid = cfg.vertices[i].kind == VertexKind::solid ||
                                    cfg.vertices[j].kind == VertexKind::solid;
                if (either_solid || !cfg.identifiable) clash = true;
            }
            if (clash) continue;
            // sound per-vertex prune; the full window check still runs at
            // the leaf
            if (cfg.vertices[i].kind == VertexKind::solid &&
                host.degree(h) != cfg.vertices[i].exact_deg)
                continue;
            if (cfg.vertices[i].kind == VertexKind::hollow &&
                host.degree(h) < cfg.vertices[i].min_deg)
                continue;
            img[i] = h;
            if (rec(i + 1)) return true;
        }
        img[i] = -1;
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("C5 yields a G1 occurrence rooted at vertex 0") {
    const Catalog& cat = builtin_catalog();
    auto occ = find_first_occurrence(HostGraph::from(cycle(5)), cat);
    REQUIRE(occ.has_value());
    CHECK(occ->config_id == "G1");
    CHECK(occ->image("2") == 0);  // the degree-2 solid vertex
    CHECK(occ->removed_edges.size() == 2);
    std::string why;
    CHECK(validate_occurrence(HostGraph::from(cycle(5)), cat, *occ, &why));
}

TEST_CASE("the diamond contains a configuration") {
    OuterDrawing diamond = build_drawing(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
    auto occ = find_first_occurrence(HostGraph::from(diamond), builtin_catalog());
    REQUIRE(occ.has_value());
    CHECK(occ->config_id == "G1");  // 0 has degree 2 with a degree-3 neighbor
}

TEST_CASE("a single edge matches nothing") {
    OuterDrawing k2 = build_drawing(2, {{0, 1}});
    CHECK(!find_first_occurrence(HostGraph::from(k2), builtin_catalog()).has_value());
}

TEST_CASE("K4 matches G10") {
    OuterDrawing k4 = build_drawing(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
    auto occ = find_first_occurrence(HostGraph::from(k4), builtin_catalog());
    REQUIRE(occ.has_value());
    CHECK(occ->config_id == "G10");
    CHECK(occ->removed_edges.size() == 5);
}

TEST_CASE("enumerate_occurrences") {
    const Catalog& cat = builtin_catalog();
    // C5: every vertex is a valid root and both neighbor roles work
    auto g1s = enumerate_occurrences(HostGraph::from(cycle(5)), cat, "G1");
    CHECK(g1s.size() == 10);
    for (const auto& occ : g1s) CHECK(validate_occurrence(HostGraph::from(cycle(5)), cat, occ));

    OuterDrawing k4 = build_drawing(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
    CHECK(enumerate_occurrences(HostGraph::from(k4), cat, "G1").empty());

    // crossing pair with only the outer edges 0-1 and 2-3
    OuterDrawing g3host = build_drawing(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
    auto g3s = enumerate_occurrences(HostGraph::from(g3host), cat, "G3");
    CHECK(!g3s.empty());
    // removed edges of a G3 occurrence are the whole 4-cycle
    CHECK(g3s[0].removed_edges.size() == 4);

    CHECK_THROWS_AS(enumerate_occurrences(HostGraph::from(k4), cat, "G99"), catalog_error);
}

TEST_CASE("removed edges are disjoint from the rest and nonempty") {
    const Catalog& cat = builtin_catalog();
    OuterDrawing host = build_drawing(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
    for (const auto* cfg : cat.solver_order()) {
        for (const auto& occ : enumerate_occurrences(HostGraph::from(host), cat, cfg->id)) {
            CHECK(!occ.removed_edges.empty());
            CHECK(validate_occurrence(HostGraph::from(host), cat, occ));
        }
    }
}

TEST_CASE("matcher agrees with the naive oracle on small drawings") {
    const Catalog& cat = builtin_catalog();
    EnumFilters filters;  // no constraints beyond max degree 4
    for (int n = 3; n <= 5; ++n) {
        enumerate_drawings(n, filters, [&](const OuterDrawing& d) {
            HostGraph host = HostGraph::from(d);
            bool any_fast = find_first_occurrence(host, cat).has_value();
            bool any_naive = false;
            for (const auto* cfg : cat.solver_order())
                if (naive_embeds(host, *cfg)) any_naive = true;
            CHECK(any_fast == any_naive);
            return true;
        });
    }
    // spot checks at n = 6: random subsample to keep the oracle affordable
    Rng rng(2024);
    int seen = 0;
    enumerate_drawings(6, filters, [&](const OuterDrawing& d) {
        if (rng.bounded(100) < 30) {
            HostGraph host = HostGraph::from(d);
            bool any_fast = find_first_occurrence(host, cat).has_value();
            bool any_naive = false;
            for (const auto* cfg : cat.solver_order())
                if (naive_embeds(host, *cfg)) any_naive = true;
            CHECK(any_fast == any_naive);
            seen++;
        }
        return seen < 250;
    });
    CHECK(seen > 100);
}

TEST_CASE("matching is deterministic") {
    OuterDrawing d = build_drawing(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6},
                                       {0, 2}, {4, 6}});
    auto a = find_first_occurrence(HostGraph::from(d), builtin_catalog());
    auto b = find_first_occurrence(HostGraph::from(d), builtin_catalog());
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->config_id == b->config_id);
    CHECK(a->vertex_map == b->vertex_map);
}
