#include "o1p/canonical.hpp"

#include <algorithm>
#include <bit>

namespace o1p {

namespace {

struct Walk {
    int m = 0;
    int cap = 0;
    std::vector<int> residual;            // per edge, list slots still to fill
    std::vector<std::uint32_t> masks;     // per edge, colors chosen so far
    int used = 0;
    std::uint64_t visited = 0;
    bool stopped = false;
    const std::function<bool(const std::vector<std::uint32_t>&, int)>* visit = nullptr;

    int max_residual() const {
        int r = 0;
        for (int x : residual) r = std::max(r, x);
        return r;
    }

    int sum_residual() const {
        int s = 0;
        for (int x : residual) s += x;
        return s;
    }

    std::uint32_t support() const {
        std::uint32_t s = 0;
        for (int e = 0; e < m; ++e)
            if (residual[e] > 0) s |= 1u << e;
        return s;
    }

    // Extend the multiset with signatures strictly below `sig_limit`.
    void recurse(std::uint32_t sig_limit) {
        if (stopped) return;
        int maxr = max_residual();
        if (maxr == 0) {
            visited++;
            if (!(*visit)(masks, used)) stopped = true;
            return;
        }
        int left = cap - used;
        if (maxr > left) return;
        std::uint32_t sup = support();
        if (static_cast<long long>(left) * std::popcount(sup) < sum_residual()) return;
        // Signatures decrease strictly, so once a step skips the
        // highest-indexed edge that still needs colors, no later step can
        // reach it; every candidate must contain that bit.
        std::uint32_t top = 1u << (31 - std::countl_zero(sup));
        if (sig_limit <= top) return;
        std::uint32_t rest = sup ^ top;
        std::uint32_t lim = sig_limit - 1;
        // bound on the below-top part; unrestricted when lim exceeds 2*top
        std::uint32_t s_max = lim >= (top << 1) ? rest : lim - top;
        std::uint32_t s = rest;
        while (s > s_max) s = (s - 1) & rest;
        for (;;) {
            std::uint32_t sig = top | s;
            int mult_max = left;
            for (int e = 0; e < m; ++e)
                if (sig >> e & 1) mult_max = std::min(mult_max, residual[e]);
            for (int mult = mult_max; mult >= 1; --mult) {
                std::uint32_t color_bits = ((1u << mult) - 1u) << used;
                for (int e = 0; e < m; ++e) {
                    if (sig >> e & 1) {
                        residual[e] -= mult;
                        masks[e] |= color_bits;
                    }
                }
                used += mult;
                recurse(sig);
                used -= mult;
                for (int e = 0; e < m; ++e) {
                    if (sig >> e & 1) {
                        residual[e] += mult;
                        masks[e] &= ~color_bits;
                    }
                }
                if (stopped) return;
            }
            if (s == 0) break;
            s = (s - 1) & rest;
        }
    }
};

}  // namespace

std::uint64_t enumerate_canonical_assignments(
    const std::vector<int>& sizes, int palette_cap,
    const std::function<bool(const std::vector<std::uint32_t>&, int)>& visit) {
    int m = static_cast<int>(sizes.size());
    if (m > 24) throw std::invalid_argument("too many edges for canonical enumeration");
    int max_size = 0;
    for (int s : sizes) max_size = std::max(max_size, s);
    if (palette_cap < max_size)
        throw cap_too_small("palette cap " + std::to_string(palette_cap) +
                            " below largest list size " + std::to_string(max_size));
    if (palette_cap > 31) throw std::invalid_argument("palette cap above mask width");
    Walk w;
    w.m = m;
    w.cap = palette_cap;
    w.residual = sizes;
    w.masks.assign(m, 0);
    w.visit = &visit;
    if (m == 0) {
        visit(w.masks, 0);
        return 1;
    }
    w.recurse((1u << m));  // no signature limit on the first pick beyond full support
    return w.visited;
}

std::uint64_t count_canonical_assignments(const std::vector<int>& sizes, int palette_cap) {
    return enumerate_canonical_assignments(
        sizes, palette_cap, [](const std::vector<std::uint32_t>&, int) { return true; });
}

ListAssignment masks_to_lists(const std::vector<Edge>& edges,
                              const std::vector<std::uint32_t>& edge_masks) {
    ListAssignment out;
    for (size_t e = 0; e < edges.size(); ++e) {
        std::vector<Color> list;
        for (int c = 0; c < 32; ++c)
            if (edge_masks[e] >> c & 1) list.push_back(c);
        out[edges[e]] = std::move(list);
    }
    return out;
}

}  // namespace o1p
