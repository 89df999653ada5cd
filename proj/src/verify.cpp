#include "o1p/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "o1p/canonical.hpp"
#include "o1p/rng.hpp"

namespace o1p {

namespace {

constexpr int kMaxEdges = 16;

// Gadget flattened to bitmask form: edge e is adjacent to the edges in
// adj[e]; lists are color masks.
struct MaskGadget {
    int m = 0;
    std::uint32_t adj[kMaxEdges] = {};
    int sizes[kMaxEdges] = {};

    static MaskGadget from(const GadgetSpec& g) {
        MaskGadget mg;
        mg.m = static_cast<int>(g.edges.size());
        if (mg.m > kMaxEdges) throw std::invalid_argument(g.id + ": too many edges");
        for (int i = 0; i < mg.m; ++i) {
            const auto& [a, b] = g.edges[i];
            mg.sizes[i] = g.list_sizes.at(named_edge_key(a, b));
            for (int j = 0; j < mg.m; ++j) {
                if (i == j) continue;
                const auto& [c, d] = g.edges[j];
                if (a == c || a == d || b == c || b == d) mg.adj[i] |= 1u << j;
            }
        }
        return mg;
    }
};

bool colorable_rec(const MaskGadget& g, std::uint32_t avail[], std::uint32_t uncolored) {
    if (uncolored == 0) return true;
    // most-constrained edge first
    int pick = -1, best = 33;
    for (std::uint32_t rest = uncolored; rest;) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        int cnt = std::popcount(avail[e]);
        if (cnt < best) {
            best = cnt;
            pick = e;
            if (cnt == 0) return false;
        }
    }
    std::uint32_t rest_uncolored = uncolored & ~(1u << pick);
    for (std::uint32_t colors = avail[pick]; colors;) {
        std::uint32_t cbit = colors & (~colors + 1);
        colors &= colors - 1;
        std::uint32_t saved[kMaxEdges];
        std::uint32_t touched = g.adj[pick] & rest_uncolored;
        for (std::uint32_t t = touched; t;) {
            int f = std::countr_zero(t);
            t &= t - 1;
            saved[f] = avail[f];
            avail[f] &= ~cbit;
        }
        if (colorable_rec(g, avail, rest_uncolored)) return true;
        for (std::uint32_t t = touched; t;) {
            int f = std::countr_zero(t);
            t &= t - 1;
            avail[f] = saved[f];
        }
    }
    return false;
}

bool mask_colorable(const MaskGadget& g, const std::uint32_t* lists) {
    std::uint32_t avail[kMaxEdges];
    std::copy(lists, lists + g.m, avail);
    return colorable_rec(g, avail, (1u << g.m) - 1);
}

// Condition predicates on mask assignments.
struct ConditionEval {
    const GadgetSpec* g = nullptr;
    const Condition* cond = nullptr;
    int i1 = -1, i2 = -1;           // disjoint/equal operand indices
    int f_idx[4] = {-1, -1, -1, -1};  // v-x, w-x, w-y, v-y
    int vw_idx = -1;

    ConditionEval(const GadgetSpec& gadget, const Condition& c) : g(&gadget), cond(&c) {
        if (c.kind == Condition::Kind::disjoint_lists || c.kind == Condition::Kind::equal_lists) {
            i1 = gadget.edge_index(c.e1);
            i2 = gadget.edge_index(c.e2);
            if (i1 < 0 || i2 < 0)
                throw catalog_error(CatalogError::schema_error,
                                    gadget.id + ": condition references unknown edge");
        }
        if (c.kind == Condition::Kind::opposite_shared_color ||
            c.kind == Condition::Kind::r0_exception) {
            const char* keys[4] = {"v-x", "w-x", "w-y", "v-y"};
            for (int i = 0; i < 4; ++i) {
                f_idx[i] = gadget.edge_index(keys[i]);
                if (f_idx[i] < 0)
                    throw catalog_error(CatalogError::schema_error,
                                        gadget.id + ": condition needs the central 4-cycle");
            }
            vw_idx = gadget.edge_index("v-w");
            if (c.kind == Condition::Kind::r0_exception && vw_idx < 0)
                throw catalog_error(CatalogError::schema_error, gadget.id + ": missing v-w");
        }
    }

    // True when the assignment is in scope for verification.
    bool admits(const std::uint32_t* lists) const {
        switch (cond->kind) {
            case Condition::Kind::disjoint_lists:
                return (lists[i1] & lists[i2]) == 0;
            case Condition::Kind::equal_lists:
                return lists[i1] == lists[i2];
            case Condition::Kind::opposite_shared_color:
                // opposite pairs of the 4-cycle v-x/w-y and w-x/v-y
                return ((lists[f_idx[0]] & lists[f_idx[2]]) | (lists[f_idx[1]] & lists[f_idx[3]])) !=
                       0;
            case Condition::Kind::r0_exception: {
                // in scope unless each color of v-w hits exactly two
                // adjacent cycle edges
                for (std::uint32_t cs = lists[vw_idx]; cs;) {
                    std::uint32_t cbit = cs & (~cs + 1);
                    cs &= cs - 1;
                    int hits = 0;
                    bool on[4];
                    for (int i = 0; i < 4; ++i) {
                        on[i] = (lists[f_idx[i]] & cbit) != 0;
                        if (on[i]) hits++;
                    }
                    if (hits != 2) return true;
                    // opposite pairs: (v-x, w-y) = (0,2), (w-x, v-y) = (1,3)
                    if ((on[0] && on[2]) || (on[1] && on[3])) return true;
                }
                return false;  // exception pattern: out of scope
            }
            case Condition::Kind::any_of:
                break;
        }
        throw std::logic_error("any_of must be split before evaluation");
    }
};

GadgetAssignment masks_to_gadget_assignment(const GadgetSpec& g,
                                            const std::vector<std::uint32_t>& masks) {
    GadgetAssignment out;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        std::vector<Color> list;
        for (int c = 0; c < 32; ++c)
            if (masks[i] >> c & 1) list.push_back(c);
        out[named_edge_key(g.edges[i].first, g.edges[i].second)] = std::move(list);
    }
    return out;
}

VerificationReport run_verification(const GadgetSpec& g, const Condition* condition, int cap,
                                    VerifyMode mode, std::uint64_t seed, std::uint64_t samples,
                                    int threads) {
    VerificationReport rep;
    rep.gadget_id = g.id;
    rep.palette_cap = cap;
    rep.mode = mode;
    if (condition) rep.condition_desc = condition_description(*condition);
    MaskGadget mg = MaskGadget::from(g);
    std::optional<ConditionEval> eval;
    if (condition) eval.emplace(g, *condition);

    if (mode == VerifyMode::exhaustive_canonical) {
        rep.complete = cap >= g.size_sum();
        std::vector<int> sizes = g.sizes_in_order();
        enumerate_canonical_assignments(
            sizes, cap, [&](const std::vector<std::uint32_t>& masks, int) {
                if (eval && !eval->admits(masks.data())) return true;
                rep.assignments_checked++;
                if (!mask_colorable(mg, masks.data())) {
                    rep.counterexample = masks_to_gadget_assignment(g, masks);
                    return false;
                }
                return true;
            });
        return rep;
    }

    // Randomized: fixed-size chunks seeded independently of the thread
    // count, so the sample stream only depends on (seed, samples).
    constexpr std::uint64_t kChunk = 1 << 14;
    std::uint64_t nchunks = (samples + kChunk - 1) / kChunk;
    std::vector<std::uint8_t> chunk_failed(nchunks, 0);
    std::vector<std::vector<std::uint32_t>> chunk_cex(nchunks);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> checked{0};
    auto worker = [&]() {
        std::uint32_t masks[kMaxEdges];
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= nchunks) return;
            Rng rng(seed ^ (0x5851f42d4c957f2dULL * (c + 1)));
            std::uint64_t lo = c * kChunk, hi = std::min(samples, lo + kChunk);
            std::uint64_t local_checked = 0;
            for (std::uint64_t s = lo; s < hi; ++s) {
                for (int e = 0; e < mg.m; ++e) {
                    std::uint32_t mask = 0;
                    for (int x : rng.subset(cap, mg.sizes[e])) mask |= 1u << x;
                    masks[e] = mask;
                }
                if (eval && !eval->admits(masks)) continue;
                local_checked++;
                if (!mask_colorable(mg, masks)) {
                    chunk_failed[c] = 1;
                    chunk_cex[c].assign(masks, masks + mg.m);
                    break;
                }
            }
            checked.fetch_add(local_checked);
        }
    };
    int t = std::max(1, threads);
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    rep.samples_drawn = samples;
    rep.assignments_checked = checked.load();
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        if (chunk_failed[c]) {
            rep.counterexample = masks_to_gadget_assignment(g, chunk_cex[c]);
            break;
        }
    }
    return rep;
}

}  // namespace

std::vector<Condition> condition_options(const Condition& c) {
    if (c.kind == Condition::Kind::any_of) return c.options;
    return {c};
}

std::string condition_description(const Condition& c) {
    switch (c.kind) {
        case Condition::Kind::disjoint_lists: return "disjoint_lists(" + c.e1 + "," + c.e2 + ")";
        case Condition::Kind::equal_lists: return "equal_lists(" + c.e1 + "," + c.e2 + ")";
        case Condition::Kind::opposite_shared_color: return "opposite_shared_color";
        case Condition::Kind::r0_exception: return "non-exception";
        case Condition::Kind::any_of: {
            std::string s = "any_of[";
            for (size_t i = 0; i < c.options.size(); ++i)
                s += (i ? "," : "") + condition_description(c.options[i]);
            return s + "]";
        }
    }
    return {};
}

VerificationReport verify_gadget(const GadgetSpec& g, int palette_cap, VerifyMode mode,
                                 std::uint64_t seed, std::uint64_t samples, int threads) {
    return run_verification(g, nullptr, palette_cap, mode, seed, samples, threads);
}

VerificationReport verify_conditional_gadget(const GadgetSpec& g, const Condition& condition,
                                             int palette_cap, VerifyMode mode, std::uint64_t seed,
                                             std::uint64_t samples, int threads) {
    return run_verification(g, &condition, palette_cap, mode, seed, samples, threads);
}

bool gadget_assignment_colorable(const GadgetSpec& g, const GadgetAssignment& lists) {
    MaskGadget mg = MaskGadget::from(g);
    std::uint32_t masks[kMaxEdges] = {};
    for (size_t i = 0; i < g.edges.size(); ++i) {
        std::string key = named_edge_key(g.edges[i].first, g.edges[i].second);
        auto it = lists.find(key);
        if (it == lists.end()) throw std::invalid_argument("assignment misses edge " + key);
        for (Color c : it->second) masks[i] |= 1u << c;
    }
    return mask_colorable(mg, masks);
}

namespace {

// All proper colorings of a tiny mask gadget, reported to a sink.
void enumerate_colorings(const MaskGadget& g, const std::uint32_t* lists, int e, int* coloring,
                         const std::function<void(const int*)>& sink) {
    if (e == g.m) {
        sink(coloring);
        return;
    }
    for (std::uint32_t cs = lists[e]; cs;) {
        int c = std::countr_zero(cs);
        cs &= cs - 1;
        bool ok = true;
        for (std::uint32_t a = g.adj[e] & ((1u << e) - 1); a;) {
            int f = std::countr_zero(a);
            a &= a - 1;
            if (coloring[f] == c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            coloring[e] = c;
            enumerate_colorings(g, lists, e + 1, coloring, sink);
        }
    }
    coloring[e] = -1;
}

GadgetSpec lemma_gadget(const std::string& id,
                        const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::map<std::string, int>& sizes) {
    GadgetSpec g;
    g.id = id;
    std::vector<std::string> vs;
    for (const auto& e : edges) {
        vs.push_back(e.first);
        vs.push_back(e.second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    g.vertices = vs;
    g.edges = edges;
    g.list_sizes = sizes;
    g.default_cap = 8;
    return g;
}

}  // namespace

LemmaReport verify_triangle_lemma(int palette_cap) {
    LemmaReport rep;
    rep.lemma = "triangle-pairs";
    rep.palette_cap = palette_cap;
    GadgetSpec tri = lemma_gadget("TRIANGLE", {{"s", "y"}, {"y", "z"}, {"s", "z"}},
                                  {{"s-y", 4}, {"y-z", 2}, {"s-z", 2}});
    std::vector<int> sizes = tri.sizes_in_order();  // s-y, y-z, s-z
    enumerate_canonical_assignments(sizes, palette_cap, [&](const std::vector<std::uint32_t>& masks,
                                                            int) {
        rep.assignments_checked++;
        auto bits = [](std::uint32_t m) {
            std::vector<int> v;
            for (int c = 0; c < 32; ++c)
                if (m >> c & 1) v.push_back(c);
            return v;
        };
        std::vector<int> sy = bits(masks[0]), yz = bits(masks[1]), sz = bits(masks[2]);
        // search for labels a,c of L(y-z) and distinct b,d from L(s-y) so
        // that all three pair completions leave a color for s-z
        auto sz_ok = [&](int p, int q) {
            return !(sz.size() == 2 && ((sz[0] == p && sz[1] == q) || (sz[0] == q && sz[1] == p)));
        };
        bool witness = false;
        for (int swap = 0; swap < 2 && !witness; ++swap) {
            int a = yz[swap], c = yz[1 - swap];
            for (int b : sy) {
                if (b == a || b == c) continue;
                for (int d : sy) {
                    if (d == a || d == c || d == b) continue;
                    if (sz_ok(a, b) && sz_ok(b, c) && sz_ok(c, d)) {
                        witness = true;
                        break;
                    }
                }
                if (witness) break;
            }
        }
        if (!witness) {
            rep.ok = false;
            rep.failure = masks_to_gadget_assignment(tri, masks);
            return false;
        }
        return true;
    });
    return rep;
}

LemmaReport verify_below_xy(const Catalog& catalog, int palette_cap) {
    LemmaReport rep;
    rep.lemma = "below-xy";
    rep.palette_cap = palette_cap;
    const GadgetSpec* r7 = catalog.gadget("R7");
    if (!r7) throw catalog_error(CatalogError::unknown_gadget_reference, "R7 missing");
    // the part of R7 strictly below the x-y edge
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, int> sizes;
    for (const auto& e : r7->edges) {
        std::string key = named_edge_key(e.first, e.second);
        if (key == "x-xp" || key == "xp-yp" || key == "y-yp" || key == "yp-z" || key == "s-z" ||
            key == "s-yp") {
            edges.push_back(e);
            sizes[key] = r7->list_sizes.at(key);
        }
    }
    GadgetSpec below = lemma_gadget("BELOW_XY", edges, sizes);
    MaskGadget mg = MaskGadget::from(below);
    int i_xx = below.edge_index("x-xp");
    int i_yy = below.edge_index("y-yp");
    enumerate_canonical_assignments(
        below.sizes_in_order(), palette_cap, [&](const std::vector<std::uint32_t>& masks, int) {
            rep.assignments_checked++;
            bool c1 = false;
            std::uint32_t xx_vals = 0, yy_vals = 0;
            int coloring[kMaxEdges];
            std::fill(coloring, coloring + mg.m, -1);
            enumerate_colorings(mg, masks.data(), 0, coloring, [&](const int* col) {
                if (col[i_xx] != col[i_yy]) c1 = true;
                xx_vals |= 1u << col[i_xx];
                yy_vals |= 1u << col[i_yy];
            });
            // any fixed color is avoidable on x-xp / y-yp iff two values
            // are achievable
            if (!c1 || std::popcount(xx_vals) < 2 || std::popcount(yy_vals) < 2) {
                rep.ok = false;
                rep.failure = masks_to_gadget_assignment(below, masks);
                return false;
            }
            return true;
        });
    return rep;
}

LemmaReport verify_kite_lemma(int palette_cap) {
    LemmaReport rep;
    rep.lemma = "kite";
    rep.palette_cap = palette_cap;
    GadgetSpec kite = lemma_gadget("KITE", {{"v", "y"}, {"w", "x"}, {"v", "x"}, {"v", "w"}},
                                   {{"v-y", 2}, {"w-x", 2}, {"v-x", 2}, {"v-w", 4}});
    int i_vy = kite.edge_index("v-y"), i_wx = kite.edge_index("w-x"), i_vx = kite.edge_index("v-x"),
        i_vw = kite.edge_index("v-w");
    enumerate_canonical_assignments(
        kite.sizes_in_order(), palette_cap, [&](const std::vector<std::uint32_t>& masks, int) {
            if (masks[i_vy] & masks[i_wx]) return true;  // lists must be disjoint
            bool cond_i = masks[i_vw] != (masks[i_vy] | masks[i_wx]);
            bool cond_ii = (masks[i_vx] & ~masks[i_vw]) != 0;
            if (!cond_i && !cond_ii) return true;
            rep.assignments_checked++;
            // some proper coloring of v-y, w-x, v-x must leave two colors on v-w
            bool good = false;
            for (int a = 0; a < 32 && !good; ++a) {
                if (!(masks[i_vy] >> a & 1)) continue;
                for (int b = 0; b < 32 && !good; ++b) {
                    if (!(masks[i_wx] >> b & 1)) continue;
                    for (int c = 0; c < 32 && !good; ++c) {
                        if (!(masks[i_vx] >> c & 1)) continue;
                        if (c == a || c == b) continue;  // v-x meets both at v and x
                        std::uint32_t used = (1u << a) | (1u << b) | (1u << c);
                        if (std::popcount(masks[i_vw] & ~used) >= 2) good = true;
                    }
                }
            }
            if (!good) {
                rep.ok = false;
                rep.failure = masks_to_gadget_assignment(kite, masks);
                return false;
            }
            return true;
        });
    return rep;
}

}  // namespace o1p
