#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace o1p {

enum class CatalogError {
    schema_error,
    unknown_gadget_reference,
    degree_inconsistency,
    missing_correspondence,
};

struct catalog_error : std::runtime_error {
    CatalogError code;
    catalog_error(CatalogError c, const std::string& what) : std::runtime_error(what), code(c) {}
};

// Edge key on named vertices: "a-b" with a < b lexicographically.
std::string named_edge_key(const std::string& a, const std::string& b);

struct Condition {
    enum class Kind { disjoint_lists, equal_lists, opposite_shared_color, r0_exception, any_of };
    Kind kind;
    std::string e1, e2;                   // for disjoint_lists / equal_lists
    std::vector<Condition> options;       // for any_of
};

struct GadgetSpec {
    std::string id;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;  // normalized keys, catalog order
    std::map<std::string, int> list_sizes;                   // edge key -> size
    enum class Claim { always_colorable, colorable_under_condition, colorable_unless_exception,
                       unclaimed } claim = Claim::always_colorable;
    std::optional<Condition> condition;
    int default_cap = 6;
    std::string figure_ref;
    std::string notes;

    int edge_index(const std::string& key) const;
    std::vector<int> sizes_in_order() const;
    int size_sum() const;
};

enum class VertexKind { solid, hollow };

struct ConfigVertex {
    std::string name;
    VertexKind kind = VertexKind::hollow;
    int exact_deg = -1;  // solid only
    int min_deg = -1;    // hollow only; at least the pictured incidence
    int max_deg = -1;    // hollow only; -1 = unconstrained
};

struct Reduction {
    std::string adhoc;          // "" for table reductions, else "path" / "4-cycle"
    std::string gadget;         // target gadget id (size source for ad-hoc rules too)
    std::map<std::string, std::string> edge_map;  // config edge key -> gadget edge key
    std::vector<std::string> extra_removed;       // removed edges not incident to a solid vertex
};

struct ConfigurationSpec {
    std::string id;
    std::vector<ConfigVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    bool identifiable = true;   // hollow vertices may be identified
    std::optional<Reduction> reduction;
    std::string anchor;         // distinguished vertex, when the source marks one
    std::string figure_ref;
    std::string notes;

    const ConfigVertex* vertex(const std::string& name) const;
    int incidence(const std::string& name) const;
    // Edges incident to a solid vertex, plus extra_removed; catalog edge order.
    std::vector<std::string> removed_edge_keys() const;
};

struct Catalog {
    std::vector<ConfigurationSpec> configurations;  // G1..G14, S1..S3
    std::vector<GadgetSpec> gadgets;

    const ConfigurationSpec* configuration(const std::string& id) const;
    const GadgetSpec* gadget(const std::string& id) const;
    // Configurations the solver matches, in matching order (skips entries
    // without a reduction).
    std::vector<const ConfigurationSpec*> solver_order() const;
};

// Shipped catalog, parsed from the embedded JSON and validated.
const Catalog& builtin_catalog();
const std::string& builtin_catalog_json();

Catalog load_catalog(const std::string& json_text);
std::string dump_catalog(const Catalog& catalog);

struct AvailabilityIssue {
    std::string config_id;
    std::string config_edge;    // edge key
    int bound = 0;              // worst-case available colors under 4-lists
    int required = 0;           // declared gadget list size
};

// Worst-case-available-color arithmetic for one configuration against its
// reduction target; empty result means consistent.
std::vector<AvailabilityIssue> availability_consistency_check(const ConfigurationSpec& cfg,
                                                              const Catalog& catalog);

}  // namespace o1p
