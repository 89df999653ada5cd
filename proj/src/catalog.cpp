#include "o1p/catalog.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace o1p {

using nlohmann::json;

std::string named_edge_key(const std::string& a, const std::string& b) {
    return a < b ? a + "-" + b : b + "-" + a;
}

namespace {

std::pair<std::string, std::string> split_key(const std::string& key) {
    auto pos = key.find('-');
    if (pos == std::string::npos)
        throw catalog_error(CatalogError::schema_error, "bad edge key: " + key);
    return {key.substr(0, pos), key.substr(pos + 1)};
}

}  // namespace

int GadgetSpec::edge_index(const std::string& key) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (named_edge_key(edges[i].first, edges[i].second) == key) return static_cast<int>(i);
    return -1;
}

std::vector<int> GadgetSpec::sizes_in_order() const {
    std::vector<int> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.push_back(list_sizes.at(named_edge_key(e.first, e.second)));
    return out;
}

int GadgetSpec::size_sum() const {
    int s = 0;
    for (const auto& [k, v] : list_sizes) s += v;
    return s;
}

const ConfigVertex* ConfigurationSpec::vertex(const std::string& name) const {
    for (const auto& v : vertices)
        if (v.name == name) return &v;
    return nullptr;
}

int ConfigurationSpec::incidence(const std::string& name) const {
    int c = 0;
    for (const auto& e : edges)
        if (e.first == name || e.second == name) c++;
    return c;
}

std::vector<std::string> ConfigurationSpec::removed_edge_keys() const {
    std::vector<std::string> out;
    const Reduction* red = reduction ? &*reduction : nullptr;
    for (const auto& e : edges) {
        const ConfigVertex* a = vertex(e.first);
        const ConfigVertex* b = vertex(e.second);
        std::string key = named_edge_key(e.first, e.second);
        bool removed = a->kind == VertexKind::solid || b->kind == VertexKind::solid;
        if (!removed && red &&
            std::find(red->extra_removed.begin(), red->extra_removed.end(), key) !=
                red->extra_removed.end())
            removed = true;
        if (removed) out.push_back(key);
    }
    return out;
}

const ConfigurationSpec* Catalog::configuration(const std::string& id) const {
    for (const auto& c : configurations)
        if (c.id == id) return &c;
    return nullptr;
}

const GadgetSpec* Catalog::gadget(const std::string& id) const {
    for (const auto& g : gadgets)
        if (g.id == id) return &g;
    return nullptr;
}

std::vector<const ConfigurationSpec*> Catalog::solver_order() const {
    std::vector<const ConfigurationSpec*> out;
    for (const auto& c : configurations)
        if (c.reduction) out.push_back(&c);
    return out;
}

namespace {

Condition parse_condition(const json& j) {
    Condition c;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "disjoint_lists" || kind == "equal_lists") {
        c.kind = kind == "disjoint_lists" ? Condition::Kind::disjoint_lists
                                          : Condition::Kind::equal_lists;
        auto edges = j.at("edges");
        if (!edges.is_array() || edges.size() != 2)
            throw catalog_error(CatalogError::schema_error, "condition needs two edges");
        c.e1 = edges[0].get<std::string>();
        c.e2 = edges[1].get<std::string>();
    } else if (kind == "opposite_shared_color") {
        c.kind = Condition::Kind::opposite_shared_color;
    } else if (kind == "r0_exception") {
        c.kind = Condition::Kind::r0_exception;
    } else if (kind == "any_of") {
        c.kind = Condition::Kind::any_of;
        for (const auto& opt : j.at("options")) c.options.push_back(parse_condition(opt));
    } else {
        throw catalog_error(CatalogError::schema_error, "unknown condition kind: " + kind);
    }
    return c;
}

json condition_to_json(const Condition& c) {
    json j;
    switch (c.kind) {
        case Condition::Kind::disjoint_lists:
            j["kind"] = "disjoint_lists";
            j["edges"] = {c.e1, c.e2};
            break;
        case Condition::Kind::equal_lists:
            j["kind"] = "equal_lists";
            j["edges"] = {c.e1, c.e2};
            break;
        case Condition::Kind::opposite_shared_color:
            j["kind"] = "opposite_shared_color";
            break;
        case Condition::Kind::r0_exception:
            j["kind"] = "r0_exception";
            break;
        case Condition::Kind::any_of: {
            j["kind"] = "any_of";
            json opts = json::array();
            for (const auto& o : c.options) opts.push_back(condition_to_json(o));
            j["options"] = opts;
            break;
        }
    }
    return j;
}

GadgetSpec::Claim parse_claim(const std::string& s) {
    if (s == "always-colorable") return GadgetSpec::Claim::always_colorable;
    if (s == "colorable-under-condition") return GadgetSpec::Claim::colorable_under_condition;
    if (s == "colorable-unless-exception") return GadgetSpec::Claim::colorable_unless_exception;
    if (s == "unclaimed") return GadgetSpec::Claim::unclaimed;
    throw catalog_error(CatalogError::schema_error, "unknown claim: " + s);
}

std::string claim_to_string(GadgetSpec::Claim c) {
    switch (c) {
        case GadgetSpec::Claim::always_colorable: return "always-colorable";
        case GadgetSpec::Claim::colorable_under_condition: return "colorable-under-condition";
        case GadgetSpec::Claim::colorable_unless_exception: return "colorable-unless-exception";
        case GadgetSpec::Claim::unclaimed: return "unclaimed";
    }
    return {};
}

std::vector<std::pair<std::string, std::string>> parse_edges(const json& j) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw catalog_error(CatalogError::schema_error, "edge must be a pair");
        std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
        if (a == b) throw catalog_error(CatalogError::schema_error, "self loop in catalog edge");
        if (b < a) std::swap(a, b);
        out.emplace_back(a, b);
    }
    return out;
}

GadgetSpec parse_gadget(const json& j) {
    GadgetSpec g;
    g.id = j.at("id").get<std::string>();
    for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
    g.edges = parse_edges(j.at("edges"));
    for (const auto& [key, val] : j.at("list_sizes").items()) g.list_sizes[key] = val.get<int>();
    if (j.contains("condition") && !j.at("condition").is_null())
        g.condition = parse_condition(j.at("condition"));
    g.claim = parse_claim(j.at("claim").get<std::string>());
    g.default_cap = j.at("default_cap").get<int>();
    g.figure_ref = j.value("figure_ref", "");
    g.notes = j.value("notes", "");
    return g;
}

void validate_gadget(const GadgetSpec& g) {
    std::set<std::string> vset(g.vertices.begin(), g.vertices.end());
    if (vset.size() != g.vertices.size())
        throw catalog_error(CatalogError::schema_error, g.id + ": duplicate vertex names");
    std::set<std::string> keys;
    for (const auto& e : g.edges) {
        if (!vset.count(e.first) || !vset.count(e.second))
            throw catalog_error(CatalogError::schema_error, g.id + ": edge endpoint not declared");
        if (!keys.insert(named_edge_key(e.first, e.second)).second)
            throw catalog_error(CatalogError::schema_error, g.id + ": duplicate edge");
    }
    if (g.list_sizes.size() != g.edges.size())
        throw catalog_error(CatalogError::schema_error, g.id + ": list_sizes must cover the edges");
    int max_size = 0;
    for (const auto& [key, size] : g.list_sizes) {
        if (!keys.count(key))
            throw catalog_error(CatalogError::schema_error, g.id + ": size for unknown edge " + key);
        if (size < 1 || size > 4)
            throw catalog_error(CatalogError::schema_error, g.id + ": list size out of 1..4");
        max_size = std::max(max_size, size);
    }
    if (g.default_cap < max_size)
        throw catalog_error(CatalogError::schema_error, g.id + ": default_cap below largest size");
}

// RHi must equal Ri plus vertex u with edges u-v and u-w of size 4.
void validate_hat(const Catalog& cat, const GadgetSpec& hat) {
    std::string base_id = "R" + hat.id.substr(2);
    const GadgetSpec* base = cat.gadget(base_id);
    if (!base)
        throw catalog_error(CatalogError::unknown_gadget_reference,
                            hat.id + ": missing base gadget " + base_id);
    std::set<std::string> hv(hat.vertices.begin(), hat.vertices.end());
    std::set<std::string> bv(base->vertices.begin(), base->vertices.end());
    bv.insert("u");
    if (hv != bv)
        throw catalog_error(CatalogError::schema_error, hat.id + ": vertex set is not base plus u");
    std::map<std::string, int> expect = base->list_sizes;
    expect["u-v"] = 4;
    expect["u-w"] = 4;
    if (hat.list_sizes != expect)
        throw catalog_error(CatalogError::schema_error,
                            hat.id + ": edges/sizes are not base plus u-v, u-w of size 4");
}

ConfigurationSpec parse_configuration(const json& j) {
    ConfigurationSpec c;
    c.id = j.at("id").get<std::string>();
    for (const auto& vj : j.at("vertices")) {
        ConfigVertex v;
        v.name = vj.at("name").get<std::string>();
        std::string kind = vj.at("kind").get<std::string>();
        if (kind == "solid") {
            v.kind = VertexKind::solid;
            v.exact_deg = vj.at("deg").get<int>();
        } else if (kind == "hollow") {
            v.kind = VertexKind::hollow;
            v.min_deg = vj.value("min_deg", 0);
            v.max_deg = vj.value("max_deg", -1);
        } else {
            throw catalog_error(CatalogError::schema_error, c.id + ": unknown vertex kind " + kind);
        }
        c.vertices.push_back(v);
    }
    c.edges = parse_edges(j.at("edges"));
    c.identifiable = j.value("identifiable", true);
    c.anchor = j.value("anchor", "");
    if (j.contains("reduction") && !j.at("reduction").is_null()) {
        Reduction r;
        const json& rj = j.at("reduction");
        r.adhoc = rj.value("adhoc", "");
        r.gadget = rj.at("gadget").get<std::string>();
        if (rj.contains("edge_map"))
            for (const auto& [key, val] : rj.at("edge_map").items())
                r.edge_map[key] = val.get<std::string>();
        if (rj.contains("extra_removed"))
            for (const auto& e : rj.at("extra_removed")) r.extra_removed.push_back(e.get<std::string>());
        c.reduction = std::move(r);
    }
    c.figure_ref = j.value("figure_ref", "");
    c.notes = j.value("notes", "");
    return c;
}

void validate_configuration(const Catalog& cat, const ConfigurationSpec& c) {
    std::set<std::string> vset;
    for (const auto& v : c.vertices)
        if (!vset.insert(v.name).second)
            throw catalog_error(CatalogError::schema_error, c.id + ": duplicate vertex " + v.name);
    std::set<std::string> keys;
    for (const auto& e : c.edges) {
        if (!vset.count(e.first) || !vset.count(e.second))
            throw catalog_error(CatalogError::schema_error, c.id + ": edge endpoint not declared");
        if (!keys.insert(named_edge_key(e.first, e.second)).second)
            throw catalog_error(CatalogError::schema_error, c.id + ": duplicate edge");
    }
    for (const auto& v : c.vertices) {
        int inc = c.incidence(v.name);
        if (v.kind == VertexKind::solid) {
            if (v.exact_deg != inc)
                throw catalog_error(CatalogError::degree_inconsistency,
                                    c.id + ": solid vertex " + v.name + " pictured with " +
                                        std::to_string(inc) + " edges but exact degree " +
                                        std::to_string(v.exact_deg));
        } else {
            int min_eff = std::max(v.min_deg, inc);
            if (v.max_deg != -1 && v.max_deg < min_eff)
                throw catalog_error(CatalogError::degree_inconsistency,
                                    c.id + ": hollow vertex " + v.name + " has max below min");
        }
    }
    if (!c.anchor.empty() && !vset.count(c.anchor))
        throw catalog_error(CatalogError::schema_error, c.id + ": unknown anchor vertex");
    if (!c.reduction) return;

    const Reduction& r = *c.reduction;
    const GadgetSpec* g = cat.gadget(r.gadget);
    if (!g)
        throw catalog_error(CatalogError::unknown_gadget_reference,
                            c.id + ": reduction references unknown gadget " + r.gadget);
    for (const auto& key : r.extra_removed) {
        if (!keys.count(key))
            throw catalog_error(CatalogError::schema_error, c.id + ": extra_removed " + key);
        auto [a, b] = split_key(key);
        if (c.vertex(a)->kind == VertexKind::solid || c.vertex(b)->kind == VertexKind::solid)
            throw catalog_error(CatalogError::schema_error,
                                c.id + ": extra_removed edge already incident to a solid vertex");
    }

    // The edge map must be a bijection between the removed edges and the
    // gadget edges and must be induced by a vertex correspondence.
    std::vector<std::string> removed = c.removed_edge_keys();
    if (r.edge_map.size() != removed.size() || removed.size() != g->edges.size())
        throw catalog_error(CatalogError::missing_correspondence,
                            c.id + ": removed-edge count does not match gadget " + r.gadget);
    std::set<std::string> image;
    for (const auto& key : removed) {
        auto it = r.edge_map.find(key);
        if (it == r.edge_map.end())
            throw catalog_error(CatalogError::missing_correspondence,
                                c.id + ": removed edge " + key + " unmapped");
        if (g->edge_index(it->second) < 0)
            throw catalog_error(CatalogError::missing_correspondence,
                                c.id + ": image " + it->second + " not in gadget " + r.gadget);
        if (!image.insert(it->second).second)
            throw catalog_error(CatalogError::missing_correspondence,
                                c.id + ": duplicate image " + it->second);
    }

    // Infer the vertex correspondence by backtracking over touched vertices.
    std::vector<std::string> touched;
    for (const auto& key : removed) {
        auto [a, b] = split_key(key);
        for (auto& t : {a, b})
            if (std::find(touched.begin(), touched.end(), t) == touched.end()) touched.push_back(t);
    }
    std::map<std::string, std::string> vmap;
    std::set<std::string> taken;
    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
        if (i == touched.size()) return true;
        const std::string& t = touched[i];
        for (const auto& gv : g->vertices) {
            if (taken.count(gv)) continue;
            vmap[t] = gv;
            bool ok = true;
            for (const auto& key : removed) {
                auto [a, b] = split_key(key);
                if (a != t && b != t) continue;
                const std::string& other = a == t ? b : a;
                auto oit = vmap.find(other);
                const std::string& img = r.edge_map.at(key);
                auto [ga, gb] = split_key(img);
                if (gv != ga && gv != gb) {
                    ok = false;
                } else if (oit != vmap.end()) {
                    const std::string& want = gv == ga ? gb : ga;
                    if (oit->second != want) ok = false;
                }
                if (!ok) break;
            }
            if (ok) {
                taken.insert(gv);
                if (assign(i + 1)) return true;
                taken.erase(gv);
            }
        }
        vmap.erase(t);
        return false;
    };
    if (!assign(0))
        throw catalog_error(CatalogError::missing_correspondence,
                            c.id + ": edge map is not induced by any vertex correspondence");
}

Catalog parse_catalog(const json& root) {
    Catalog cat;
    for (const auto& gj : root.at("gadgets")) {
        GadgetSpec g = parse_gadget(gj);
        validate_gadget(g);
        cat.gadgets.push_back(std::move(g));
    }
    if (root.contains("hat_gadgets")) {
        for (const auto& hj : root.at("hat_gadgets").at("entries")) {
            std::string base_id = hj.at("base").get<std::string>();
            const GadgetSpec* base = cat.gadget(base_id);
            if (!base)
                throw catalog_error(CatalogError::unknown_gadget_reference,
                                    "hat gadget over unknown base " + base_id);
            GadgetSpec hat = *base;
            hat.id = hj.at("id").get<std::string>();
            hat.vertices.push_back("u");
            hat.edges.emplace_back("u", "v");
            hat.edges.emplace_back("u", "w");
            hat.list_sizes["u-v"] = 4;
            hat.list_sizes["u-w"] = 4;
            hat.claim = parse_claim(hj.at("claim").get<std::string>());
            hat.default_cap = hj.at("default_cap").get<int>();
            if (hj.contains("condition") && !hj.at("condition").is_null())
                hat.condition = parse_condition(hj.at("condition"));
            else
                hat.condition.reset();
            hat.figure_ref = "fig4/" + hat.id;
            hat.notes = "base gadget " + base_id + " plus apex u joined to v and w";
            validate_gadget(hat);
            cat.gadgets.push_back(std::move(hat));
        }
    }
    for (const auto& g : cat.gadgets) {
        if (g.id.rfind("RH", 0) == 0) validate_hat(cat, g);
        // R0..R7 and their hats carry the central 4-cycle on v, x, w, y.
        if ((g.id.rfind("R", 0) == 0 && g.id != "R8" && g.id != "R9" && g.id != "RH8" &&
             g.id != "RH9")) {
            for (const char* key : {"v-x", "w-x", "w-y", "v-y"})
                if (g.edge_index(key) < 0)
                    throw catalog_error(CatalogError::schema_error,
                                        g.id + ": missing central 4-cycle edge " + key);
        }
    }
    for (const auto& cj : root.at("configurations")) {
        ConfigurationSpec c = parse_configuration(cj);
        validate_configuration(cat, c);
        cat.configurations.push_back(std::move(c));
    }
    return cat;
}

}  // namespace

Catalog load_catalog(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw catalog_error(CatalogError::schema_error, std::string("json parse: ") + e.what());
    }
    try {
        return parse_catalog(root);
    } catch (const json::exception& e) {
        throw catalog_error(CatalogError::schema_error, std::string("schema: ") + e.what());
    }
}

std::string dump_catalog(const Catalog& cat) {
    json root;
    json configs = json::array();
    for (const auto& c : cat.configurations) {
        json cj;
        cj["id"] = c.id;
        json vs = json::array();
        for (const auto& v : c.vertices) {
            json vj;
            vj["name"] = v.name;
            if (v.kind == VertexKind::solid) {
                vj["kind"] = "solid";
                vj["deg"] = v.exact_deg;
            } else {
                vj["kind"] = "hollow";
                vj["min_deg"] = v.min_deg;
                if (v.max_deg != -1) vj["max_deg"] = v.max_deg;
            }
            vs.push_back(vj);
        }
        cj["vertices"] = vs;
        json es = json::array();
        for (const auto& e : c.edges) es.push_back({e.first, e.second});
        cj["edges"] = es;
        cj["identifiable"] = c.identifiable;
        if (!c.anchor.empty()) cj["anchor"] = c.anchor;
        if (c.reduction) {
            json rj;
            if (!c.reduction->adhoc.empty()) rj["adhoc"] = c.reduction->adhoc;
            rj["gadget"] = c.reduction->gadget;
            rj["edge_map"] = c.reduction->edge_map;
            if (!c.reduction->extra_removed.empty()) rj["extra_removed"] = c.reduction->extra_removed;
            cj["reduction"] = rj;
        } else {
            cj["reduction"] = nullptr;
        }
        cj["figure_ref"] = c.figure_ref;
        cj["notes"] = c.notes;
        configs.push_back(cj);
    }
    root["configurations"] = configs;
    json gs = json::array();
    for (const auto& g : cat.gadgets) {
        json gj;
        gj["id"] = g.id;
        gj["vertices"] = g.vertices;
        json es = json::array();
        for (const auto& e : g.edges) es.push_back({e.first, e.second});
        gj["edges"] = es;
        gj["list_sizes"] = g.list_sizes;
        gj["condition"] = g.condition ? condition_to_json(*g.condition) : json(nullptr);
        gj["claim"] = claim_to_string(g.claim);
        gj["default_cap"] = g.default_cap;
        gj["figure_ref"] = g.figure_ref;
        gj["notes"] = g.notes;
        gs.push_back(gj);
    }
    root["gadgets"] = gs;
    return root.dump(2) + "\n";
}

const Catalog& builtin_catalog() {
    static const Catalog cat = load_catalog(builtin_catalog_json());
    return cat;
}

std::vector<AvailabilityIssue> availability_consistency_check(const ConfigurationSpec& cfg,
                                                              const Catalog& catalog) {
    std::vector<AvailabilityIssue> issues;
    if (!cfg.reduction) return issues;
    const GadgetSpec* g = catalog.gadget(cfg.reduction->gadget);
    if (!g)
        throw catalog_error(CatalogError::missing_correspondence,
                            cfg.id + ": missing gadget " + cfg.reduction->gadget);
    std::vector<std::string> removed = cfg.removed_edge_keys();
    std::set<std::string> removed_set(removed.begin(), removed.end());
    // Colored edges that can touch a removed edge at vertex t: host edges at
    // t beyond the pictured ones (bounded by the degree cap, 4 at most),
    // plus pictured edges at t that are not removed.
    auto survivors = [&](const std::string& name) {
        const ConfigVertex* v = cfg.vertex(name);
        if (v->kind == VertexKind::solid) return 0;
        int inc = cfg.incidence(name);
        int cap = v->max_deg == -1 ? 4 : v->max_deg;
        int unremoved = 0;
        for (const auto& e : cfg.edges) {
            if (e.first != name && e.second != name) continue;
            if (!removed_set.count(named_edge_key(e.first, e.second))) unremoved++;
        }
        return (cap - inc) + unremoved;
    };
    for (const auto& key : removed) {
        auto [a, b] = split_key(key);
        int bound = 4 - survivors(a) - survivors(b);
        auto it = cfg.reduction->edge_map.find(key);
        if (it == cfg.reduction->edge_map.end())
            throw catalog_error(CatalogError::missing_correspondence,
                                cfg.id + ": removed edge " + key + " unmapped");
        int required = g->list_sizes.at(it->second);
        if (bound < required) issues.push_back({cfg.id, key, bound, required});
    }
    return issues;
}

}  // namespace o1p
