#include "o1p/coloring.hpp"

#include <algorithm>

namespace o1p {

ColoringProblem ColoringProblem::from(const std::vector<Edge>& edges, const ListAssignment& lists) {
    ColoringProblem p;
    p.edges = edges;
    p.adjacent.resize(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i].adjacent_to(edges[j])) {
                p.adjacent[i].push_back(static_cast<int>(j));
                p.adjacent[j].push_back(static_cast<int>(i));
            }
        }
    }
    p.lists.resize(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        auto it = lists.find(edges[i]);
        if (it != lists.end()) {
            p.lists[i] = it->second;
            std::sort(p.lists[i].begin(), p.lists[i].end());
            p.lists[i].erase(std::unique(p.lists[i].begin(), p.lists[i].end()), p.lists[i].end());
        }
    }
    return p;
}

std::vector<Color> available_colors(const ColoringProblem& p, const std::vector<Color>& coloring,
                                    int edge_idx) {
    std::vector<Color> avail;
    for (Color c : p.lists[edge_idx]) {
        bool used = false;
        for (int j : p.adjacent[edge_idx]) {
            if (coloring[j] == c) {
                used = true;
                break;
            }
        }
        if (!used) avail.push_back(c);
    }
    return avail;
}

namespace {

int count_available(const ColoringProblem& p, const std::vector<Color>& coloring, int e) {
    int cnt = 0;
    for (Color c : p.lists[e]) {
        bool used = false;
        for (int j : p.adjacent[e]) {
            if (coloring[j] == c) {
                used = true;
                break;
            }
        }
        if (!used) cnt++;
    }
    return cnt;
}

bool backtrack(const ColoringProblem& p, std::vector<Color>& coloring, SearchStats* stats) {
    int pick = -1, pick_avail = -1;
    for (size_t e = 0; e < p.edges.size(); ++e) {
        if (coloring[e] != -1) continue;
        int a = count_available(p, coloring, static_cast<int>(e));
        if (pick == -1 || a < pick_avail) {
            pick = static_cast<int>(e);
            pick_avail = a;
            if (a == 0) break;
        }
    }
    if (pick == -1) return true;
    if (pick_avail == 0) return false;
    for (Color c : available_colors(p, coloring, pick)) {
        if (stats) stats->nodes++;
        coloring[pick] = c;
        if (backtrack(p, coloring, stats)) return true;
        coloring[pick] = -1;
    }
    return false;
}

}  // namespace

bool backtrack_color(const ColoringProblem& p, std::vector<Color>& coloring, SearchStats* stats) {
    if (coloring.size() != p.edges.size()) coloring.assign(p.edges.size(), -1);
    return backtrack(p, coloring, stats);
}

std::string ColoringViolation::describe() const {
    switch (kind) {
        case adjacent_same_color:
            return "adjacent edges " + a.key() + " and " + b.key() + " share a color";
        case color_not_in_list:
            return "edge " + a.key() + " uses a color outside its list";
        case missing_edge:
            return "edge " + a.key() + " is uncolored";
    }
    return {};
}

std::vector<ColoringViolation> check_coloring(const OuterDrawing& d, const ListAssignment* lists,
                                              const EdgeColoring& coloring) {
    std::vector<ColoringViolation> out;
    for (const Edge& e : d.edges) {
        auto it = coloring.find(e);
        if (it == coloring.end()) {
            out.push_back({ColoringViolation::missing_edge, e, {}});
            continue;
        }
        if (lists) {
            auto lt = lists->find(e);
            bool in_list = lt != lists->end() &&
                           std::find(lt->second.begin(), lt->second.end(), it->second) != lt->second.end();
            if (!in_list) out.push_back({ColoringViolation::color_not_in_list, e, {}});
        }
    }
    for (size_t i = 0; i < d.edges.size(); ++i) {
        auto ci = coloring.find(d.edges[i]);
        if (ci == coloring.end()) continue;
        for (size_t j = i + 1; j < d.edges.size(); ++j) {
            if (!d.edges[i].adjacent_to(d.edges[j])) continue;
            auto cj = coloring.find(d.edges[j]);
            if (cj != coloring.end() && ci->second == cj->second)
                out.push_back({ColoringViolation::adjacent_same_color, d.edges[i], d.edges[j]});
        }
    }
    return out;
}

ListAssignment uniform_lists(const OuterDrawing& d, int k) {
    std::vector<Color> full(k);
    for (int c = 0; c < k; ++c) full[c] = c;
    ListAssignment lists;
    for (const Edge& e : d.edges) lists[e] = full;
    return lists;
}

int brute_force_chromatic_index(const OuterDrawing& d) {
    if (d.num_edges() > kChromaticIndexEdgeGuard)
        throw graph_error(GraphError::too_large, "chromatic index guard: more than 16 edges");
    if (d.num_edges() == 0) return 0;
    int delta = degree_stats(d).max_degree;
    for (int k = std::max(1, delta);; ++k) {
        ColoringProblem p = ColoringProblem::from(d.edges, uniform_lists(d, k));
        std::vector<Color> coloring(p.edges.size(), -1);
        if (backtrack_color(p, coloring)) return k;
    }
}

}  // namespace o1p
