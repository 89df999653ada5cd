#pragma once

#include <string>

#include "o1p/coloring.hpp"
#include "o1p/graph.hpp"
#include "o1p/solver.hpp"
#include "o1p/verify.hpp"

namespace o1p {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph interchange: {"n": int, "edges": [[u,v], ...]}, 0-based ids,
// order-insensitive, normalized to u < v on output.
OuterDrawing graph_from_json(const std::string& text);
std::string graph_to_json(const OuterDrawing& d);

// Lists: {"lists": {"u-v": [c0, c1, ...], ...}}.
ListAssignment lists_from_json(const std::string& text);
std::string lists_to_json(const ListAssignment& lists);

// Colorings: {"coloring": {"u-v": c, ...}}.
EdgeColoring coloring_from_json(const std::string& text);
std::string coloring_to_json(const EdgeColoring& coloring);

Edge edge_from_key(const std::string& key);

std::string solver_result_to_json(const SolverResult& result);
SolverResult solver_result_from_json(const std::string& text);

std::string solver_failure_to_json(const SolverFailure& failure);

std::string verification_report_to_json(const VerificationReport& report);
std::string lemma_report_to_json(const LemmaReport& report);
std::string audit_report_to_json(const AuditReport& report);

}  // namespace o1p
