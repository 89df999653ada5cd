// Command line front end: list edge coloring of outer-1-plane drawings,
// catalog inspection, gadget verification and desk-scale audits.
//
// Exit codes: 0 success, 1 I/O or schema error, 2 precondition violation,
// 3 structural or choosability witness (a reduced graph without a catalog
// configuration, a failed extension, or a gadget counterexample).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "o1p/canonical.hpp"
#include "o1p/json_io.hpp"
#include "o1p/solver.hpp"
#include "o1p/verify.hpp"

using namespace o1p;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitWitness = 3;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << text;
}

void print_error(const std::string& kind, const std::string& message) {
    std::cerr << "{\"error\": \"" << kind << "\", \"message\": \"" << message << "\"}\n";
}

struct ColorArgs {
    std::string graph_path;
    std::string lists_path;
    bool random = false;
    int palette = 8;
    std::uint64_t seed = 0;
    std::string witness_path = "witness.json";
};

int cmd_color(const ColorArgs& args) {
    OuterDrawing d = graph_from_json(read_file(args.graph_path));
    ListAssignment lists;
    if (args.random) {
        lists = random_lists(d, 4, args.palette, args.seed);
        std::cerr << "# random 4-lists, palette " << args.palette << ", seed " << args.seed << "\n";
    } else if (!args.lists_path.empty()) {
        lists = lists_from_json(read_file(args.lists_path));
    } else {
        lists = uniform_lists(d, 4);
    }
    auto outcome = color_outer1planar(d, lists, builtin_catalog());
    if (std::holds_alternative<SolverResult>(outcome)) {
        const SolverResult& res = std::get<SolverResult>(outcome);
        auto violations = check_coloring(d, &lists, res.coloring);
        if (!violations.empty()) {
            print_error("internal", "solver produced an improper coloring");
            return kExitWitness;
        }
        std::cout << solver_result_to_json(res);
        return kExitOk;
    }
    const SolverFailure& f = std::get<SolverFailure>(outcome);
    if (f.kind == SolverFailureKind::precondition_violated) {
        print_error("precondition", f.message);
        return kExitPrecondition;
    }
    std::string repro = "o1p color --graph " + args.graph_path;
    if (args.random)
        repro += " --random-lists --palette " + std::to_string(args.palette) + " --seed " +
                 std::to_string(args.seed);
    else if (!args.lists_path.empty())
        repro += " --lists " + args.lists_path;
    std::string dump = solver_failure_to_json(f);
    dump.insert(dump.find_first_of('{') + 1, "\n  \"repro\": \"" + repro + "\",");
    write_file(args.witness_path, dump);
    print_error(f.kind == SolverFailureKind::no_configuration_found ? "no_configuration_found"
                                                                    : "extension_failed",
                f.message + " (witness: " + args.witness_path + ")");
    return kExitWitness;
}

int cmd_check(const std::string& graph_path, const std::string& lists_path,
              const std::string& coloring_path, const std::string& result_path) {
    OuterDrawing d = graph_from_json(read_file(graph_path));
    ListAssignment lists;
    bool have_lists = !lists_path.empty();
    if (have_lists) lists = lists_from_json(read_file(lists_path));
    if (!result_path.empty()) {
        SolverResult res = solver_result_from_json(read_file(result_path));
        auto violation = verify_trace(d, have_lists ? &lists : nullptr, res);
        if (violation) {
            std::cout << "{\"ok\": false, \"step\": " << violation->step << ", \"message\": \""
                      << violation->message << "\"}\n";
            return kExitPrecondition;
        }
        std::cout << "{\"ok\": true}\n";
        return kExitOk;
    }
    EdgeColoring coloring = coloring_from_json(read_file(coloring_path));
    auto violations = check_coloring(d, have_lists ? &lists : nullptr, coloring);
    if (!violations.empty()) {
        std::cout << "{\"ok\": false, \"violations\": [";
        for (size_t i = 0; i < violations.size(); ++i)
            std::cout << (i ? ", " : "") << "\"" << violations[i].describe() << "\"";
        std::cout << "]}\n";
        return kExitPrecondition;
    }
    std::cout << "{\"ok\": true}\n";
    return kExitOk;
}

int cmd_verify_gadgets(const std::string& only, int cap_override, const std::string& mode_name,
                       std::uint64_t seed, std::uint64_t samples, int threads) {
    const Catalog& cat = builtin_catalog();
    bool any_counterexample = false;
    for (const GadgetSpec& g : cat.gadgets) {
        if (!only.empty() && g.id != only) continue;
        if (only.empty() && g.claim == GadgetSpec::Claim::unclaimed) continue;
        int cap = cap_override > 0 ? cap_override : g.default_cap;
        VerifyMode mode =
            mode_name == "randomized" ? VerifyMode::randomized : VerifyMode::exhaustive_canonical;
        std::uint64_t n_samples = mode == VerifyMode::randomized && samples == 0 ? 100000 : samples;
        std::vector<VerificationReport> reports;
        if (g.condition && g.claim != GadgetSpec::Claim::always_colorable) {
            for (const Condition& opt : condition_options(*g.condition))
                reports.push_back(
                    verify_conditional_gadget(g, opt, cap, mode, seed, n_samples, threads));
        } else {
            reports.push_back(verify_gadget(g, cap, mode, seed, n_samples, threads));
        }
        for (const auto& rep : reports) {
            std::cout << verification_report_to_json(rep) << "\n";
            if (!rep.ok()) any_counterexample = true;
        }
    }
    return any_counterexample ? kExitWitness : kExitOk;
}

int cmd_verify_lemmas(int cap) {
    bool ok = true;
    LemmaReport tri = verify_triangle_lemma(cap);
    std::cout << lemma_report_to_json(tri) << "\n";
    ok &= tri.ok;
    LemmaReport below = verify_below_xy(builtin_catalog(), std::min(cap, 6));
    std::cout << lemma_report_to_json(below) << "\n";
    ok &= below.ok;
    LemmaReport kite = verify_kite_lemma(cap);
    std::cout << lemma_report_to_json(kite) << "\n";
    ok &= kite.ok;
    return ok ? kExitOk : kExitWitness;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list edge coloring of outer-1-plane drawings"};
    app.require_subcommand(1);

    // color
    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "color a drawing from per-edge lists");
    color->add_option("--graph", color_args.graph_path, "graph JSON")->required();
    color->add_option("--lists", color_args.lists_path, "lists JSON");
    color->add_flag("--random-lists", color_args.random, "draw random 4-lists");
    color->add_option("--palette", color_args.palette, "palette size for random lists");
    color->add_option("--seed", color_args.seed, "seed for random lists");
    color->add_option("--witness", color_args.witness_path, "witness dump path");

    // check
    std::string check_graph, check_lists, check_coloring_path, check_result;
    auto* check = app.add_subcommand("check", "check a coloring or replay a solver result");
    check->add_option("--graph", check_graph, "graph JSON")->required();
    check->add_option("--lists", check_lists, "lists JSON");
    check->add_option("--coloring", check_coloring_path, "coloring JSON");
    check->add_option("--result", check_result, "solver result JSON to replay");

    // verify-gadgets
    std::string vg_id, vg_mode = "exhaustive";
    int vg_cap = 0, vg_threads = 1;
    std::uint64_t vg_seed = 0, vg_samples = 0;
    auto* vg = app.add_subcommand("verify-gadgets", "verify gadget choosability claims");
    vg->add_option("--gadget", vg_id, "single gadget id");
    vg->add_option("--cap", vg_cap, "palette cap (default: shipped per gadget)");
    vg->add_option("--mode", vg_mode, "exhaustive | randomized");
    vg->add_option("--seed", vg_seed, "seed (randomized)");
    vg->add_option("--samples", vg_samples, "sample count (randomized)");
    vg->add_option("--threads", vg_threads, "worker threads (randomized)");

    // verify-lemmas
    int vl_cap = 8;
    auto* vl = app.add_subcommand("verify-lemmas", "verify the auxiliary coloring lemmas");
    vl->add_option("--cap", vl_cap, "palette cap");

    // audit
    int audit_nmax = 7, audit_nmin = 3;
    bool audit_two_connected = false, audit_force = false;
    auto* audit = app.add_subcommand("audit", "exhaustive structure audit at desk scale");
    audit->add_option("--n-max", audit_nmax, "largest vertex count");
    audit->add_option("--n-min", audit_nmin, "smallest vertex count");
    audit->add_flag("--two-connected", audit_two_connected, "restrict to 2-connected drawings");
    audit->add_flag("--force", audit_force, "lift the n <= 8 guard");

    // gen
    GeneratorConfig gen_cfg;
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--n", gen_cfg.n, "vertex count")->required();
    gen->add_option("--seed", gen_cfg.seed, "seed");
    gen->add_option("--crossings-min", gen_cfg.crossings_min, "fewest crossings");
    gen->add_option("--crossings-max", gen_cfg.crossings_max, "most crossings");
    gen->add_option("--chord-density", gen_cfg.chord_density, "extra chord density");
    bool gen_no_theta = false;
    gen->add_flag("--no-theta3", gen_no_theta, "drop the crossing-distance requirement");

    // enumerate
    int enum_n = 5;
    EnumFilters enum_filters;
    bool enum_force = false, enum_count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "list small drawings up to symmetry");
    enumerate->add_option("--n", enum_n, "vertex count")->required();
    enumerate->add_option("--delta-min", enum_filters.delta_min, "minimum degree filter");
    enumerate->add_option("--delta-max", enum_filters.delta_max, "maximum degree filter");
    enumerate->add_option("--theta-min", enum_filters.theta_min, "crossing distance filter");
    enumerate->add_option("--crossings-min", enum_filters.crossings_min, "fewest crossings");
    enumerate->add_flag("--two-connected", enum_filters.two_connected, "2-connected only");
    enumerate->add_flag("--force", enum_force, "lift the n <= 8 guard");
    enumerate->add_flag("--count-only", enum_count_only, "print the count only");

    // chi-prime
    std::string chi_graph;
    auto* chi = app.add_subcommand("chi-prime", "brute-force edge chromatic number");
    chi->add_option("--graph", chi_graph, "graph JSON")->required();

    // theta
    std::string theta_graph;
    auto* theta_cmd = app.add_subcommand("theta", "crossing distance of the drawing");
    theta_cmd->add_option("--graph", theta_graph, "graph JSON")->required();

    // export-dot
    std::string dot_graph, dot_coloring;
    auto* dot = app.add_subcommand("export-dot", "emit DOT with circular layout");
    dot->add_option("--graph", dot_graph, "graph JSON")->required();
    dot->add_option("--coloring", dot_coloring, "coloring JSON for edge labels");

    // catalog
    bool catalog_dump = false, catalog_validate = false;
    auto* catalog_cmd = app.add_subcommand("catalog", "inspect the shipped catalog");
    catalog_cmd->add_flag("--dump", catalog_dump, "print the catalog JSON");
    catalog_cmd->add_flag("--validate", catalog_validate, "run the availability arithmetic");

    CLI11_PARSE(app, argc, argv);

    try {
        if (color->parsed()) return cmd_color(color_args);
        if (check->parsed())
            return cmd_check(check_graph, check_lists, check_coloring_path, check_result);
        if (vg->parsed())
            return cmd_verify_gadgets(vg_id, vg_cap, vg_mode, vg_seed, vg_samples, vg_threads);
        if (vl->parsed()) return cmd_verify_lemmas(vl_cap);
        if (audit->parsed()) {
            EnumFilters filters;
            filters.delta_min = 2;
            filters.theta_min = 3;
            filters.two_connected = audit_two_connected;
            AuditReport rep =
                audit_structure(audit_nmin, audit_nmax, filters, builtin_catalog(), audit_force);
            std::cout << audit_report_to_json(rep);
            return rep.failures.empty() ? kExitOk : kExitWitness;
        }
        if (gen->parsed()) {
            gen_cfg.require_theta3 = !gen_no_theta;
            OuterDrawing d = random_instance(gen_cfg);
            std::cout << graph_to_json(d) << "\n";
            return kExitOk;
        }
        if (enumerate->parsed()) {
            if (enum_count_only) {
                std::cout << count_drawings(enum_n, enum_filters, enum_force) << "\n";
            } else {
                enumerate_drawings(
                    enum_n, enum_filters,
                    [&](const OuterDrawing& d) {
                        std::cout << graph_to_json(d) << "\n";
                        return true;
                    },
                    enum_force);
            }
            return kExitOk;
        }
        if (chi->parsed()) {
            OuterDrawing d = graph_from_json(read_file(chi_graph));
            std::cout << brute_force_chromatic_index(d) << "\n";
            return kExitOk;
        }
        if (theta_cmd->parsed()) {
            OuterDrawing d = graph_from_json(read_file(theta_graph));
            auto t = crossing_distance(d);
            if (t)
                std::cout << *t << "\n";
            else
                std::cout << "inf\n";
            return kExitOk;
        }
        if (dot->parsed()) {
            OuterDrawing d = graph_from_json(read_file(dot_graph));
            if (!dot_coloring.empty()) {
                EdgeColoring col = coloring_from_json(read_file(dot_coloring));
                std::vector<int> per_edge(d.edges.size(), -1);
                for (size_t i = 0; i < d.edges.size(); ++i) {
                    auto it = col.find(d.edges[i]);
                    if (it != col.end()) per_edge[i] = it->second;
                }
                std::cout << to_dot(d, &per_edge);
            } else {
                std::cout << to_dot(d);
            }
            return kExitOk;
        }
        if (catalog_cmd->parsed()) {
            if (catalog_validate) {
                const Catalog& cat = builtin_catalog();
                bool ok = true;
                for (const auto& cfg : cat.configurations) {
                    for (const auto& issue : availability_consistency_check(cfg, cat)) {
                        ok = false;
                        std::cerr << issue.config_id << " " << issue.config_edge << ": bound "
                                  << issue.bound << " < required " << issue.required << "\n";
                    }
                }
                std::cout << (ok ? "{\"ok\": true}" : "{\"ok\": false}") << "\n";
                return ok ? kExitOk : kExitWitness;
            }
            std::cout << (catalog_dump ? dump_catalog(builtin_catalog())
                                       : builtin_catalog_json() + "\n");
            return kExitOk;
        }
    } catch (const graph_error& e) {
        if (e.code == GraphError::not_outer1planar || e.code == GraphError::too_large) {
            print_error("precondition", e.what());
            return kExitPrecondition;
        }
        print_error("graph", e.what());
        return kExitIo;
    } catch (const catalog_error& e) {
        print_error("catalog", e.what());
        return kExitIo;
    } catch (const cap_too_small& e) {
        print_error("precondition", e.what());
        return kExitPrecondition;
    } catch (const generation_exhausted& e) {
        print_error("generation", e.what());
        return kExitPrecondition;
    } catch (const io_error& e) {
        print_error("io", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        print_error("error", e.what());
        return kExitIo;
    }
    return kExitOk;
}
