// Acceptance suite: one pass/fail line per criterion.
//
//   1  solver totality on generated instances with max degree 4 and
//      crossing distance at least 3, 1000 instances x 20 list assignments
//   2  the same protocol restricted to max degree 3, no distance condition
//   3  exhaustive structure audit for 3 <= n <= 7 (n = 8 behind --with-n8)
//   4  gadget verification: exhaustive-canonical for the small family,
//      bounded-palette exhaustive plus randomized sampling for the large
//   5  chromatic index oracle cross-checks
//   6  search-engine completeness against naive enumeration
//   7  byte-identical reruns of criteria 1-4
//
// Runs single-threaded by default; pass --threads N to parallelize the
// randomized sampling in criterion 4.

#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "o1p/canonical.hpp"
#include "o1p/json_io.hpp"
#include "o1p/rng.hpp"
#include "o1p/solver.hpp"
#include "o1p/verify.hpp"

using namespace o1p;

namespace {

int g_threads = 1;
bool g_with_n8 = false;

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct CriterionResult {
    bool pass = false;
    std::string detail;
    std::string artifact;  // canonical JSON-ish string for determinism checks
};

// ---------------------------------------------------------------- 1 and 2
CriterionResult run_solver_totality(bool delta3_only) {
    const Catalog& catalog = builtin_catalog();
    const int kInstances = 1000;
    const int kAssignments = 20;
    const std::uint64_t base_seed = delta3_only ? 520031 : 420011;

    std::uint64_t solved = 0, failures = 0, skipped_seeds = 0;
    std::uint64_t artifact_hash = fnv1a("start");
    Rng meta(base_seed);
    int made = 0;
    std::uint64_t seed = base_seed;
    while (made < kInstances) {
        seed++;
        GeneratorConfig cfg;
        cfg.seed = seed;
        Rng pick(seed * 7919);
        cfg.n = 5 + static_cast<int>(pick.bounded(196));
        int max_cross = std::min(3, cfg.n / 8);
        cfg.crossings_min = 0;
        cfg.crossings_max = max_cross;
        cfg.chord_density = 0.15 + 0.35 * (pick.bounded(1000) / 1000.0);
        cfg.delta_cap = delta3_only ? 3 : 4;
        cfg.require_theta3 = !delta3_only;
        cfg.retry_budget = 200;
        OuterDrawing d;
        try {
            d = random_instance(cfg);
        } catch (const generation_exhausted&) {
            skipped_seeds++;
            continue;
        }
        made++;
        for (int j = 0; j < kAssignments; ++j) {
            int palette = j < 7 ? 4 : (j < 14 ? 8 : 100);
            ListAssignment lists = random_lists(d, 4, palette, seed * 100 + j);
            auto outcome = color_outer1planar(d, lists, catalog);
            if (!std::holds_alternative<SolverResult>(outcome)) {
                failures++;
                continue;
            }
            const SolverResult& res = std::get<SolverResult>(outcome);
            if (!check_coloring(d, &lists, res.coloring).empty()) {
                failures++;
                continue;
            }
            solved++;
            artifact_hash = fnv1a(coloring_to_json(res.coloring), artifact_hash);
        }
    }
    CriterionResult r;
    std::ostringstream art;
    art << "{\"instances\": " << made << ", \"assignments\": " << kAssignments
        << ", \"solved\": " << solved << ", \"failures\": " << failures
        << ", \"colorings_hash\": " << artifact_hash << "}";
    r.artifact = art.str();
    r.pass = failures == 0 && solved == static_cast<std::uint64_t>(kInstances * kAssignments);
    std::ostringstream det;
    det << solved << "/" << kInstances * kAssignments << " colorings verified, " << failures
        << " failures (skipped seeds: " << skipped_seeds << ")";
    r.detail = det.str();
    return r;
}

// --------------------------------------------------------------------- 3
CriterionResult run_structure_audit() {
    EnumFilters filters;
    filters.delta_min = 2;
    filters.theta_min = 3;
    int n_max = g_with_n8 ? 8 : 7;
    AuditReport rep = audit_structure(3, n_max, filters, builtin_catalog(), g_with_n8);
    CriterionResult r;
    r.artifact = audit_report_to_json(rep);
    r.pass = rep.failures.empty();
    std::ostringstream det;
    det << rep.drawings_checked << " drawings (n <= " << n_max << "), " << rep.failures.size()
        << " without a configuration";
    r.detail = det.str();
    return r;
}

// --------------------------------------------------------------------- 4
CriterionResult run_gadget_verification() {
    const Catalog& cat = builtin_catalog();
    bool all_ok = true;
    std::ostringstream art;
    std::ostringstream det;
    auto note = [&](const VerificationReport& rep) {
        art << verification_report_to_json(rep) << "\n";
        if (!rep.ok()) {
            all_ok = false;
            bool confirmed =
                !gadget_assignment_colorable(*builtin_catalog().gadget(rep.gadget_id),
                                             *rep.counterexample);
            det << rep.gadget_id
                << (rep.condition_desc.empty() ? "" : "[" + rep.condition_desc + "]")
                << (confirmed ? " CONFIRMED counterexample (claim falsified); " : " UNCONFIRMED; ");
        }
    };

    // exhaustive-canonical family, at the shipped caps
    for (const char* id : {"C4", "T2", "R1", "R2", "R3", "RH1"}) {
        const GadgetSpec* g = cat.gadget(id);
        note(verify_gadget(*g, g->default_cap, VerifyMode::exhaustive_canonical));
    }
    for (const char* id : {"T1", "R0", "RH2"}) {
        const GadgetSpec* g = cat.gadget(id);
        for (const Condition& opt : condition_options(*g->condition))
            note(verify_conditional_gadget(*g, opt, g->default_cap,
                                           VerifyMode::exhaustive_canonical));
    }
    LemmaReport tri = verify_triangle_lemma(8);
    art << lemma_report_to_json(tri) << "\n";
    all_ok &= tri.ok;
    LemmaReport below = verify_below_xy(cat, 6);
    art << lemma_report_to_json(below) << "\n";
    all_ok &= below.ok;
    LemmaReport kite = verify_kite_lemma(8);
    art << lemma_report_to_json(kite) << "\n";
    all_ok &= kite.ok;

    // large gadgets: bounded-palette exhaustive at the shipped cap plus a
    // million seeded samples at cap 10
    for (const char* id :
         {"T3", "T4", "T5", "T6", "R4", "RH4", "RH5", "RH6", "RH7", "RH8", "RH9"}) {
        const GadgetSpec* g = cat.gadget(id);
        note(verify_gadget(*g, g->default_cap, VerifyMode::exhaustive_canonical));
        note(verify_gadget(*g, 10, VerifyMode::randomized, 90210, 1000000, g_threads));
    }
    CriterionResult r;
    r.artifact = art.str();
    r.pass = all_ok;
    r.detail = all_ok ? "zero counterexamples across all reports" : det.str();
    return r;
}

// --------------------------------------------------------------------- 5
CriterionResult run_chromatic_oracle() {
    std::uint64_t checked = 0, wrong = 0;
    EnumFilters filters;
    for (int n = 3; n <= 6; ++n) {
        enumerate_drawings(n, filters, [&](const OuterDrawing& d) {
            if (degree_stats(d).max_degree != 4 || d.num_edges() > 12) return true;
            checked++;
            if (brute_force_chromatic_index(d) != 4) wrong++;
            return true;
        });
    }
    auto cycle = [](int n) {
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
        return build_drawing(n, edges);
    };
    bool pinned = brute_force_chromatic_index(cycle(5)) == 3;
    OuterDrawing k4 = build_drawing(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
    pinned = pinned && brute_force_chromatic_index(k4) == 3;
    OuterDrawing star = build_drawing(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    pinned = pinned && brute_force_chromatic_index(star) == 4;

    CriterionResult r;
    std::ostringstream art;
    art << "{\"delta4_drawings\": " << checked << ", \"mismatches\": " << wrong
        << ", \"pinned_ok\": " << (pinned ? "true" : "false") << "}";
    r.artifact = art.str();
    r.pass = wrong == 0 && pinned;
    std::ostringstream det;
    det << checked << " max-degree-4 drawings all have chromatic index 4; pinned values "
        << (pinned ? "ok" : "WRONG");
    r.detail = det.str();
    return r;
}

// --------------------------------------------------------------------- 6
CriterionResult run_engine_completeness() {
    // backtrack vs product-space enumeration over every <= 6-edge subgraph
    // of K6, with canonical lists over at most 4 colors
    std::uint64_t graphs = 0, assignments = 0, disagreements = 0;
    std::vector<Edge> k6;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) k6.emplace_back(u, v);

    std::function<void(size_t, std::vector<Edge>&)> sweep = [&](size_t idx,
                                                                std::vector<Edge>& chosen) {
        if (chosen.size() > 6) return;
        if (idx == k6.size()) {
            if (chosen.empty()) return;
            graphs++;
            ColoringProblem base;
            base.edges = chosen;
            base.adjacent.assign(chosen.size(), {});
            for (size_t i = 0; i < chosen.size(); ++i)
                for (size_t j = i + 1; j < chosen.size(); ++j)
                    if (chosen[i].adjacent_to(chosen[j])) {
                        base.adjacent[i].push_back(static_cast<int>(j));
                        base.adjacent[j].push_back(static_cast<int>(i));
                    }
            Rng rng(fnv1a(std::to_string(graphs)));
            for (int variant = 0; variant < 6; ++variant) {
                std::vector<int> sizes(chosen.size());
                for (auto& s : sizes)
                    s = variant < 4 ? variant + 1 : 1 + static_cast<int>(rng.bounded(4));
                enumerate_canonical_assignments(
                    sizes, 4, [&](const std::vector<std::uint32_t>& masks, int) {
                        assignments++;
                        ColoringProblem p = base;
                        p.lists.resize(chosen.size());
                        for (size_t e = 0; e < chosen.size(); ++e) {
                            p.lists[e].clear();
                            for (int c = 0; c < 4; ++c)
                                if (masks[e] >> c & 1) p.lists[e].push_back(c);
                        }
                        std::vector<Color> coloring;
                        bool fast = backtrack_color(p, coloring);
                        // naive product-space check
                        bool naive = false;
                        std::function<bool(size_t)> rec = [&](size_t i) -> bool {
                            if (i == p.edges.size()) return true;
                            for (Color c : p.lists[i]) {
                                bool ok = true;
                                for (int j : p.adjacent[i])
                                    if (static_cast<size_t>(j) < i && coloring[j] == c) ok = false;
                                if (!ok) continue;
                                coloring[i] = c;
                                if (rec(i + 1)) return true;
                            }
                            return false;
                        };
                        coloring.assign(p.edges.size(), -1);
                        naive = rec(0);
                        if (fast != naive) disagreements++;
                        return true;
                    });
            }
            return;
        }
        sweep(idx + 1, chosen);
        chosen.push_back(k6[idx]);
        sweep(idx + 1, chosen);
        chosen.pop_back();
    };
    std::vector<Edge> chosen;
    sweep(0, chosen);

    // canonical counts vs brute-force orbit counts on <= 3 edges is covered
    // in the unit suite; repeat the pinned counts here
    bool counts_ok = count_canonical_assignments({2}, 4) == 1 &&
                     count_canonical_assignments({2, 2}, 4) == 3 &&
                     count_canonical_assignments({1, 1}, 2) == 2;

    CriterionResult r;
    std::ostringstream art;
    art << "{\"graphs\": " << graphs << ", \"assignments\": " << assignments
        << ", \"disagreements\": " << disagreements << "}";
    r.artifact = art.str();
    r.pass = disagreements == 0 && counts_ok;
    std::ostringstream det;
    det << graphs << " graphs, " << assignments << " assignments, " << disagreements
        << " disagreements";
    r.detail = det.str();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) g_threads = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--with-n8") == 0) g_with_n8 = true;
    }

    struct Entry {
        const char* name;
        std::function<CriterionResult()> run;
        CriterionResult result;
        bool rerun_for_determinism;
    };
    std::vector<Entry> criteria;
    criteria.push_back({"criterion 1 (solver totality, max degree 4)",
                        [] { return run_solver_totality(false); }, {}, true});
    criteria.push_back({"criterion 2 (solver totality, max degree 3)",
                        [] { return run_solver_totality(true); }, {}, true});
    criteria.push_back({"criterion 3 (structure audit)", run_structure_audit, {}, true});
    criteria.push_back({"criterion 4 (gadget verification)", run_gadget_verification, {}, true});
    criteria.push_back({"criterion 5 (chromatic index oracle)", run_chromatic_oracle, {}, false});
    criteria.push_back({"criterion 6 (engine completeness)", run_engine_completeness, {}, false});

    bool all_pass = true;
    for (auto& entry : criteria) {
        entry.result = entry.run();
        std::cout << entry.name << ": " << (entry.result.pass ? "PASS" : "FAIL") << " - "
                  << entry.result.detail << std::endl;
        all_pass &= entry.result.pass;
    }

    // criterion 7: byte-identical artifacts on a second run of criteria 1-4
    bool deterministic = true;
    for (auto& entry : criteria) {
        if (!entry.rerun_for_determinism) continue;
        CriterionResult again = entry.run();
        if (again.artifact != entry.result.artifact) deterministic = false;
    }
    std::cout << "criterion 7 (determinism): " << (deterministic ? "PASS" : "FAIL")
              << " - criteria 1-4 reran byte-identically" << std::endl;
    all_pass &= deterministic;

    return all_pass ? 0 : 1;
}
