#include "o1p/json_io.hpp"

#include <json.hpp>

namespace o1p {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw io_error(std::string("json parse: ") + e.what());
    }
}

std::string edge_key(const Edge& e) { return e.key(); }

json coloring_obj(const EdgeColoring& coloring) {
    json obj = json::object();
    for (const auto& [e, c] : coloring) obj[edge_key(e)] = c;
    return obj;
}

}  // namespace

Edge edge_from_key(const std::string& key) {
    auto pos = key.find('-');
    if (pos == std::string::npos || pos == 0 || pos + 1 >= key.size())
        throw io_error("bad edge key: " + key);
    try {
        int u = std::stoi(key.substr(0, pos));
        int v = std::stoi(key.substr(pos + 1));
        return Edge(u, v);
    } catch (const std::exception&) {
        throw io_error("bad edge key: " + key);
    }
}

OuterDrawing graph_from_json(const std::string& text) {
    json j = parse(text);
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw io_error("edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return build_drawing(n, edges);
    } catch (const json::exception& e) {
        throw io_error(std::string("graph schema: ") + e.what());
    }
}

std::string graph_to_json(const OuterDrawing& d) {
    json j;
    j["n"] = d.n;
    json edges = json::array();
    for (const Edge& e : d.edges) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    return j.dump();
}

ListAssignment lists_from_json(const std::string& text) {
    json j = parse(text);
    ListAssignment lists;
    try {
        for (const auto& [key, val] : j.at("lists").items()) {
            std::vector<Color> colors;
            for (const auto& c : val) colors.push_back(c.get<int>());
            lists[edge_from_key(key)] = std::move(colors);
        }
    } catch (const json::exception& e) {
        throw io_error(std::string("lists schema: ") + e.what());
    }
    return lists;
}

std::string lists_to_json(const ListAssignment& lists) {
    json obj = json::object();
    for (const auto& [e, colors] : lists) obj[edge_key(e)] = colors;
    json j;
    j["lists"] = obj;
    return j.dump();
}

EdgeColoring coloring_from_json(const std::string& text) {
    json j = parse(text);
    EdgeColoring coloring;
    try {
        for (const auto& [key, val] : j.at("coloring").items())
            coloring[edge_from_key(key)] = val.get<int>();
    } catch (const json::exception& e) {
        throw io_error(std::string("coloring schema: ") + e.what());
    }
    return coloring;
}

std::string coloring_to_json(const EdgeColoring& coloring) {
    json j;
    j["coloring"] = coloring_obj(coloring);
    return j.dump();
}

namespace {

json occurrence_to_json(const Occurrence& occ) {
    json j;
    j["configuration"] = occ.config_id;
    json vm = json::object();
    for (const auto& [name, v] : occ.vertex_map) vm[name] = v;
    j["vertex_map"] = vm;
    json removed = json::array();
    for (const Edge& e : occ.removed_edges) removed.push_back(edge_key(e));
    j["removed_edges"] = removed;
    return j;
}

Occurrence occurrence_from_json(const json& j) {
    Occurrence occ;
    occ.config_id = j.at("configuration").get<std::string>();
    const Catalog& cat = builtin_catalog();
    const ConfigurationSpec* cfg = cat.configuration(occ.config_id);
    // preserve the configuration's vertex order when available
    if (cfg) {
        for (const auto& v : cfg->vertices)
            occ.vertex_map.emplace_back(v.name, j.at("vertex_map").at(v.name).get<int>());
    } else {
        for (const auto& [name, val] : j.at("vertex_map").items())
            occ.vertex_map.emplace_back(name, val.get<int>());
    }
    for (const auto& k : j.at("removed_edges")) occ.removed_edges.push_back(edge_from_key(k));
    return occ;
}

}  // namespace

std::string solver_result_to_json(const SolverResult& result) {
    json j;
    j["coloring"] = coloring_obj(result.coloring);
    json steps = json::array();
    for (const TraceStep& s : result.trace) {
        json sj;
        sj["kind"] = s.kind == TraceStep::Kind::pendant ? "pendant" : "configuration";
        if (s.kind == TraceStep::Kind::pendant) sj["pendant_edge"] = edge_key(s.pendant_edge);
        if (s.occurrence) sj["occurrence"] = occurrence_to_json(*s.occurrence);
        json removed = json::array();
        for (const Edge& e : s.removed_edges) removed.push_back(edge_key(e));
        sj["removed_edges"] = removed;
        sj["extension"] = coloring_obj(s.extension);
        sj["search_nodes"] = s.search_nodes;
        steps.push_back(sj);
    }
    j["trace"] = steps;
    j["stats"] = {{"steps", result.stats.steps},
                  {"total_extension_nodes", result.stats.total_extension_nodes},
                  {"max_extension_nodes", result.stats.max_extension_nodes}};
    return j.dump(2) + "\n";
}

SolverResult solver_result_from_json(const std::string& text) {
    json j = parse(text);
    SolverResult result;
    try {
        for (const auto& [key, val] : j.at("coloring").items())
            result.coloring[edge_from_key(key)] = val.get<int>();
        for (const auto& sj : j.at("trace")) {
            TraceStep s;
            std::string kind = sj.at("kind").get<std::string>();
            s.kind = kind == "pendant" ? TraceStep::Kind::pendant : TraceStep::Kind::configuration;
            if (sj.contains("pendant_edge"))
                s.pendant_edge = edge_from_key(sj.at("pendant_edge").get<std::string>());
            if (sj.contains("occurrence")) s.occurrence = occurrence_from_json(sj.at("occurrence"));
            for (const auto& k : sj.at("removed_edges")) s.removed_edges.push_back(edge_from_key(k));
            for (const auto& [key, val] : sj.at("extension").items())
                s.extension[edge_from_key(key)] = val.get<int>();
            s.search_nodes = sj.value("search_nodes", 0);
            result.trace.push_back(std::move(s));
        }
        result.stats.steps = j.at("stats").at("steps").get<int>();
        result.stats.total_extension_nodes = j.at("stats").value("total_extension_nodes", 0);
        result.stats.max_extension_nodes = j.at("stats").value("max_extension_nodes", 0);
    } catch (const json::exception& e) {
        throw io_error(std::string("result schema: ") + e.what());
    }
    return result;
}

std::string solver_failure_to_json(const SolverFailure& failure) {
    json j;
    switch (failure.kind) {
        case SolverFailureKind::precondition_violated: j["kind"] = "precondition_violated"; break;
        case SolverFailureKind::no_configuration_found: j["kind"] = "no_configuration_found"; break;
        case SolverFailureKind::extension_failed: j["kind"] = "extension_failed"; break;
    }
    j["message"] = failure.message;
    if (!failure.residual_edges.empty()) {
        json edges = json::array();
        for (const Edge& e : failure.residual_edges) edges.push_back({e.u, e.v});
        j["residual_edges"] = edges;
    }
    if (failure.occurrence) j["occurrence"] = occurrence_to_json(*failure.occurrence);
    if (!failure.residual_lists.empty()) {
        json obj = json::object();
        for (const auto& [e, colors] : failure.residual_lists) obj[edge_key(e)] = colors;
        j["residual_lists"] = obj;
    }
    return j.dump(2) + "\n";
}

std::string verification_report_to_json(const VerificationReport& report) {
    json j;
    j["gadget"] = report.gadget_id;
    j["palette_cap"] = report.palette_cap;
    // a bounded palette is an honest restriction of the universal claim
    j["mode"] = report.mode == VerifyMode::randomized
                    ? "randomized"
                    : (report.complete ? "exhaustive-canonical" : "bounded-palette");
    if (!report.condition_desc.empty()) j["condition"] = report.condition_desc;
    j["assignments_checked"] = report.assignments_checked;
    if (report.mode == VerifyMode::randomized) j["samples_drawn"] = report.samples_drawn;
    j["complete"] = report.complete;
    if (report.counterexample) {
        json ce = json::object();
        for (const auto& [key, colors] : *report.counterexample) ce[key] = colors;
        j["counterexample"] = ce;
    } else {
        j["counterexample"] = nullptr;
    }
    return j.dump();
}

std::string lemma_report_to_json(const LemmaReport& report) {
    json j;
    j["lemma"] = report.lemma;
    j["palette_cap"] = report.palette_cap;
    j["assignments_checked"] = report.assignments_checked;
    j["ok"] = report.ok;
    if (report.failure) {
        json f = json::object();
        for (const auto& [key, colors] : *report.failure) f[key] = colors;
        j["failure"] = f;
    }
    return j.dump();
}

std::string audit_report_to_json(const AuditReport& report) {
    json j;
    j["n_min"] = report.n_min;
    j["n_max"] = report.n_max;
    j["filters"] = {{"delta_max", report.filters.delta_max},
                    {"delta_min", report.filters.delta_min},
                    {"two_connected", report.filters.two_connected},
                    {"theta_min", report.filters.theta_min},
                    {"crossings_min", report.filters.crossings_min}};
    j["drawings_checked"] = report.drawings_checked;
    j["matched"] = report.matched;
    json fails = json::array();
    for (const auto& f : report.failures) {
        json g;
        g["n"] = f.drawing.n;
        json edges = json::array();
        for (const Edge& e : f.drawing.edges) edges.push_back({e.u, e.v});
        g["edges"] = edges;
        fails.push_back(g);
    }
    j["failures"] = fails;
    return j.dump(2) + "\n";
}

}  // namespace o1p
