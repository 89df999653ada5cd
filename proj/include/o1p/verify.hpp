#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "o1p/catalog.hpp"
#include "o1p/coloring.hpp"

namespace o1p {

// Lists on a gadget's named edges.
using GadgetAssignment = std::map<std::string, std::vector<Color>>;

enum class VerifyMode { exhaustive_canonical, randomized };

struct VerificationReport {
    std::string gadget_id;
    int palette_cap = 0;
    VerifyMode mode = VerifyMode::exhaustive_canonical;
    std::string condition_desc;            // empty when unconditional
    std::uint64_t assignments_checked = 0; // condition-satisfying assignments tested
    std::uint64_t samples_drawn = 0;       // randomized mode only
    bool complete = false;                 // cap covers the full universal claim
    std::optional<GadgetAssignment> counterexample;

    bool ok() const { return !counterexample.has_value(); }
};

// Universal colorability check over canonical assignments at the cap
// (exhaustive) or over seeded uniform assignments (randomized).
VerificationReport verify_gadget(const GadgetSpec& g, int palette_cap, VerifyMode mode,
                                 std::uint64_t seed = 0, std::uint64_t samples = 0,
                                 int threads = 1);

// Same, restricted to assignments satisfying `condition` (for the
// exception kind: restricted to assignments NOT matching the exception).
VerificationReport verify_conditional_gadget(const GadgetSpec& g, const Condition& condition,
                                             int palette_cap, VerifyMode mode,
                                             std::uint64_t seed = 0, std::uint64_t samples = 0,
                                             int threads = 1);

// Splits an any_of condition into its options (a single-element vector
// otherwise) so each sufficient condition is verified on its own.
std::vector<Condition> condition_options(const Condition& c);
std::string condition_description(const Condition& c);

// Checks an explicit assignment by exhaustive backtracking; used to confirm
// counterexamples independently of the canonical walk.
bool gadget_assignment_colorable(const GadgetSpec& g, const GadgetAssignment& lists);

struct LemmaReport {
    std::string lemma;
    int palette_cap = 0;
    std::uint64_t assignments_checked = 0;
    bool ok = true;
    std::optional<GadgetAssignment> failure;
};

// Triangle s,y,z with sizes s-z:2, y-z:2, s-y:4: for every assignment there
// are distinct colors a,b,c,d with L(y-z)={a,c} and b,d in L(s-y) such that
// the two edges at y can take each of {a,b},{b,c},{c,d} and still extend to
// s-z.
LemmaReport verify_triangle_lemma(int palette_cap);

// The six edges of R7 below x-y: every assignment admits proper colorings
// giving x-xp and y-yp different colors, and at least two achievable colors
// on each of x-xp and y-yp (so any fixed color can be avoided on either).
LemmaReport verify_below_xy(const Catalog& catalog, int palette_cap);

// Kite v,w,x + pendant v-y with sizes v-y:2, w-x:2, v-x:2, v-w:4, lists of
// v-y and w-x disjoint: whenever L(v-w) != L(v-y) u L(w-x) or L(v-x) is not
// a subset of L(v-w), some proper coloring of the three 2-edges leaves at
// least two colors available on v-w.
LemmaReport verify_kite_lemma(int palette_cap);

}  // namespace o1p
