#include "o1p/matcher.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace o1p {

bool HostGraph::has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    const auto& na = adj[a];
    return std::binary_search(na.begin(), na.end(), b);
}

std::vector<Edge> HostGraph::edge_list() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : adj[v])
            if (v < w) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

Vertex Occurrence::image(const std::string& name) const {
    for (const auto& [k, v] : vertex_map)
        if (k == name) return v;
    return -1;
}

namespace {

int tier(const ConfigVertex& v) {
    if (v.kind == VertexKind::solid) return 0;
    return v.max_deg != -1 ? 1 : 2;
}

// Solids first, then capped hollows, then free hollows; after the root,
// prefer vertices adjacent to an already placed one so host candidates
// stay confined to neighbor lists.
std::vector<int> match_order(const ConfigurationSpec& cfg) {
    int k = static_cast<int>(cfg.vertices.size());
    std::vector<std::vector<int>> nbr(k);
    auto index_of = [&](const std::string& name) {
        for (int i = 0; i < k; ++i)
            if (cfg.vertices[i].name == name) return i;
        return -1;
    };
    for (const auto& e : cfg.edges) {
        int a = index_of(e.first), b = index_of(e.second);
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    while (static_cast<int>(order.size()) < k) {
        int best = -1;
        bool best_connected = false;
        for (int i = 0; i < k; ++i) {
            if (placed[i]) continue;
            bool connected = false;
            for (int j : nbr[i])
                if (placed[j]) connected = true;
            if (best == -1 || std::pair(!connected, std::pair(tier(cfg.vertices[i]), i)) <
                                  std::pair(!best_connected, std::pair(tier(cfg.vertices[best]), best))) {
                best = i;
                best_connected = connected;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

struct MatchState {
    const ConfigurationSpec* cfg;
    const HostGraph* host;
    std::vector<int> order;
    std::vector<std::vector<int>> cfg_nbr;      // config adjacency (indices)
    std::vector<Vertex> image;                  // config index -> host vertex, -1 unset
    std::vector<std::vector<int>> at_host_tmp;  // scratch for merged checks
    std::set<Edge> used_host_edges;
    bool stop_at_first = false;
    std::vector<Occurrence> found;

    bool placement_ok(int ci, Vertex h) const {
        const ConfigVertex& cv = cfg->vertices[ci];
        int deg = host->degree(h);
        if (cv.kind == VertexKind::solid) {
            if (deg != cv.exact_deg) return false;
        } else {
            int min_eff = std::max(cv.min_deg, cfg->incidence(cv.name));
            if (deg < min_eff) return false;
            if (cv.max_deg != -1 && deg > cv.max_deg) return false;
        }
        for (size_t cj = 0; cj < image.size(); ++cj) {
            if (image[cj] != h || static_cast<int>(cj) == ci) continue;
            // coincidence: only hollow with hollow, and only if permitted
            if (!cfg->identifiable) return false;
            if (cv.kind == VertexKind::solid || cfg->vertices[cj].kind == VertexKind::solid)
                return false;
        }
        return true;
    }

    // Degree constraints for host vertices holding several hollow images:
    // each pictured edge consumes a distinct host edge, so the pictured
    // incidences add up, and every cap must hold.
    bool merged_degrees_ok() const {
        std::map<Vertex, std::vector<int>> groups;
        for (size_t ci = 0; ci < image.size(); ++ci) groups[image[ci]].push_back(static_cast<int>(ci));
        for (const auto& [h, members] : groups) {
            if (members.size() < 2) continue;
            int total_inc = 0;
            int cap = host->degree(h);  // no constraint tighter than its own degree
            int min_sum = 0;
            for (int ci : members) {
                const ConfigVertex& cv = cfg->vertices[ci];
                total_inc += cfg->incidence(cv.name);
                min_sum = std::max(min_sum, cv.min_deg);
                if (cv.max_deg != -1) cap = std::min(cap, cv.max_deg);
            }
            int deg = host->degree(h);
            if (deg < std::max(total_inc, min_sum) || deg > cap) return false;
        }
        return true;
    }

    void emit() {
        Occurrence occ;
        occ.config_id = cfg->id;
        for (size_t i = 0; i < cfg->vertices.size(); ++i)
            occ.vertex_map.emplace_back(cfg->vertices[i].name, image[i]);
        for (const auto& key : cfg->removed_edge_keys()) {
            auto pos = key.find('-');
            std::string a = key.substr(0, pos), b = key.substr(pos + 1);
            int ia = -1, ib = -1;
            for (size_t i = 0; i < cfg->vertices.size(); ++i) {
                if (cfg->vertices[i].name == a) ia = static_cast<int>(i);
                if (cfg->vertices[i].name == b) ib = static_cast<int>(i);
            }
            occ.removed_edges.emplace_back(image[ia], image[ib]);
        }
        std::sort(occ.removed_edges.begin(), occ.removed_edges.end());
        found.push_back(std::move(occ));
    }

    bool dfs(size_t pos) {
        if (pos == order.size()) {
            if (!merged_degrees_ok()) return false;
            emit();
            return stop_at_first;
        }
        int ci = order[pos];
        // When a config neighbor is already placed, only host neighbors of
        // its image can work; scanning that list keeps ascending order.
        const std::vector<Vertex>* candidates = nullptr;
        for (int cj : cfg_nbr[ci]) {
            if (image[cj] != -1) {
                candidates = &host->adj[image[cj]];
                break;
            }
        }
        int limit = candidates ? static_cast<int>(candidates->size()) : host->n;
        for (int t = 0; t < limit; ++t) {
            Vertex h = candidates ? (*candidates)[t] : t;
            if (!placement_ok(ci, h)) continue;
            // pictured edges into the placed part must exist and be fresh
            std::vector<Edge> added;
            bool ok = true;
            for (int cj : cfg_nbr[ci]) {
                if (image[cj] == -1) continue;
                if (image[cj] == h || !host->has_edge(h, image[cj])) {
                    ok = false;
                    break;
                }
                Edge e(h, image[cj]);
                if (used_host_edges.count(e)) {
                    ok = false;
                    break;
                }
                added.push_back(e);
                used_host_edges.insert(e);
            }
            if (ok) {
                image[ci] = h;
                if (dfs(pos + 1)) return true;
                image[ci] = -1;
            }
            for (const Edge& e : added) used_host_edges.erase(e);
        }
        return false;
    }
};

std::vector<Occurrence> match_configuration(const HostGraph& host, const ConfigurationSpec& cfg,
                                            bool first_only) {
    MatchState st;
    st.cfg = &cfg;
    st.host = &host;
    st.order = match_order(cfg);
    int k = static_cast<int>(cfg.vertices.size());
    st.cfg_nbr.resize(k);
    auto index_of = [&](const std::string& name) {
        for (int i = 0; i < k; ++i)
            if (cfg.vertices[i].name == name) return i;
        return -1;
    };
    for (const auto& e : cfg.edges) {
        int a = index_of(e.first), b = index_of(e.second);
        st.cfg_nbr[a].push_back(b);
        st.cfg_nbr[b].push_back(a);
    }
    st.image.assign(k, -1);
    st.stop_at_first = first_only;
    st.dfs(0);
    return std::move(st.found);
}

}  // namespace

std::optional<Occurrence> find_first_occurrence(const HostGraph& host, const Catalog& catalog) {
    for (const ConfigurationSpec* cfg : catalog.solver_order()) {
        auto found = match_configuration(host, *cfg, true);
        if (!found.empty()) return std::move(found.front());
    }
    return std::nullopt;
}

std::vector<Occurrence> enumerate_occurrences(const HostGraph& host, const Catalog& catalog,
                                              const std::string& config_id) {
    const ConfigurationSpec* cfg = catalog.configuration(config_id);
    if (!cfg)
        throw catalog_error(CatalogError::unknown_gadget_reference,
                            "unknown configuration " + config_id);
    return match_configuration(host, *cfg, false);
}

bool validate_occurrence(const HostGraph& host, const Catalog& catalog, const Occurrence& occ,
                         std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = occ.config_id + ": " + msg;
        return false;
    };
    const ConfigurationSpec* cfg = catalog.configuration(occ.config_id);
    if (!cfg) return fail("unknown configuration");
    if (occ.vertex_map.size() != cfg->vertices.size()) return fail("vertex map size mismatch");
    std::map<std::string, Vertex> img;
    for (const auto& [name, h] : occ.vertex_map) {
        if (!cfg->vertex(name)) return fail("unknown vertex " + name);
        if (h < 0 || h >= host.n) return fail("image out of range");
        img[name] = h;
    }
    if (img.size() != cfg->vertices.size()) return fail("duplicate vertex names in map");
    // distinctness and identification
    for (const auto& a : cfg->vertices) {
        for (const auto& b : cfg->vertices) {
            if (a.name >= b.name) continue;
            if (img[a.name] != img[b.name]) continue;
            if (a.kind == VertexKind::solid || b.kind == VertexKind::solid)
                return fail("solid image coincides with another image");
            if (!cfg->identifiable) return fail("identification not permitted");
        }
    }
    // pictured edges exist and map to distinct host edges
    std::set<Edge> used;
    for (const auto& e : cfg->edges) {
        Vertex a = img[e.first], b = img[e.second];
        if (a == b) return fail("pictured edge collapsed to a loop");
        if (!host.has_edge(a, b)) return fail("missing host edge for " + e.first + "-" + e.second);
        if (!used.insert(Edge(a, b)).second) return fail("two pictured edges share a host edge");
    }
    // degree windows, with pictured incidences accumulated per host vertex
    std::map<Vertex, int> pictured_at;
    for (const auto& v : cfg->vertices) pictured_at[img[v.name]] += cfg->incidence(v.name);
    for (const auto& v : cfg->vertices) {
        int deg = host.degree(img[v.name]);
        if (v.kind == VertexKind::solid) {
            if (deg != v.exact_deg) return fail("solid degree mismatch at " + v.name);
        } else {
            if (deg < std::max(v.min_deg, pictured_at[img[v.name]]))
                return fail("hollow degree below minimum at " + v.name);
            if (v.max_deg != -1 && deg > v.max_deg)
                return fail("hollow degree above cap at " + v.name);
        }
    }
    // removed edges are exactly the images of the configuration's removed set
    std::vector<Edge> expect;
    for (const auto& key : cfg->removed_edge_keys()) {
        auto pos = key.find('-');
        expect.emplace_back(img[key.substr(0, pos)], img[key.substr(pos + 1)]);
    }
    std::sort(expect.begin(), expect.end());
    if (expect != occ.removed_edges) return fail("removed edge set mismatch");
    return true;
}

}  // namespace o1p
