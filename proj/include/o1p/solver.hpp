#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "o1p/catalog.hpp"
#include "o1p/coloring.hpp"
#include "o1p/factory.hpp"
#include "o1p/graph.hpp"
#include "o1p/matcher.hpp"

namespace o1p {

struct TraceStep {
    enum class Kind { pendant, configuration };
    Kind kind = Kind::pendant;
    Edge pendant_edge;                    // pendant steps
    std::optional<Occurrence> occurrence; // configuration steps
    std::vector<Edge> removed_edges;      // host edges removed here, sorted
    EdgeColoring extension;               // colors chosen while unwinding
    std::uint64_t search_nodes = 0;
};

struct SolverStats {
    int steps = 0;
    std::uint64_t total_extension_nodes = 0;
    std::uint64_t max_extension_nodes = 0;
};

struct SolverResult {
    EdgeColoring coloring;
    std::vector<TraceStep> trace;  // removal order, components in ascending order
    SolverStats stats;
};

enum class SolverFailureKind {
    precondition_violated,
    no_configuration_found,  // witness against the structure theorem
    extension_failed,        // witness against a gadget lemma
};

struct SolverFailure {
    SolverFailureKind kind;
    std::string message;
    // Witness payload for the two falsification classes.
    std::vector<Edge> residual_edges;       // graph state at failure
    std::optional<Occurrence> occurrence;   // extension failures
    ListAssignment residual_lists;          // available colors at failure
};

using SolverOutcome = std::variant<SolverResult, SolverFailure>;

// End-to-end reduction coloring.  Preconditions: valid outer-1-plane
// drawing, max degree at most 4, every list of size at least 4, and, when
// the max degree is 4 and the drawing has two or more crossings, crossing
// distance at least 3.
SolverOutcome color_outer1planar(const OuterDrawing& d, const ListAssignment& lists,
                                 const Catalog& catalog);

struct TraceViolation {
    int step = -1;  // -1: global property
    std::string message;
};

// Independent replay: reconstructs the reduction sequence, re-validates
// every occurrence and pendant step against the graph state it was taken
// in, and re-checks the assembled coloring (properness only when no lists
// are given).
std::optional<TraceViolation> verify_trace(const OuterDrawing& d, const ListAssignment* lists,
                                           const SolverResult& result);
inline std::optional<TraceViolation> verify_trace(const OuterDrawing& d,
                                                  const ListAssignment& lists,
                                                  const SolverResult& result) {
    return verify_trace(d, &lists, result);
}

struct AuditFailure {
    OuterDrawing drawing;
};

struct AuditReport {
    int n_min = 3, n_max = 7;
    EnumFilters filters;
    std::uint64_t drawings_checked = 0;
    std::map<std::string, std::uint64_t> matched;  // configuration id -> count
    std::vector<AuditFailure> failures;            // drawings with no occurrence
};

// Exhaustive desk-scale check that every enumerated drawing passing the
// filters contains a catalog configuration.
AuditReport audit_structure(int n_min, int n_max, const EnumFilters& filters,
                            const Catalog& catalog, bool force = false);

}  // namespace o1p
