#include "cpm/aut_search.hpp"

#include <algorithm>
#include <set>

namespace cpm {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

struct Partition {
    std::vector<int> color;  // cell id per vertex, ids are ranks 0..num_cells-1
    int num_cells = 1;
};

// Scratch buffers shared by all refinement calls on one graph.
struct RefineScratch {
    int stride = 0;
    std::vector<int> sig;    // n * stride
    std::vector<int> order;  // n
    std::vector<int> next;   // n
};

// Equitable refinement: repeatedly recolor by (color, sorted neighbor
// colors) until the cell count stops growing.  Appends one hash per pass to
// `trace`; hashes involve only cell ids and counts, so they are invariant
// under isomorphism.  When `expect` is given, refinement aborts as soon as a
// pass hash deviates from it, returning false.
bool refine(const CpmGraph& g, Partition& p, RefineScratch& scratch,
            std::vector<std::uint64_t>* trace, const std::vector<std::uint64_t>* expect) {
    const int n = g.size();
    if (scratch.stride == 0) {
        int max_deg = 0;
        for (int v = 0; v < n; ++v)
            max_deg = std::max(max_deg, static_cast<int>(g.neighbors(v).size()));
        scratch.stride = max_deg + 1;
        scratch.sig.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(scratch.stride),
                           -1);
        scratch.order.resize(static_cast<std::size_t>(n));
        scratch.next.resize(static_cast<std::size_t>(n));
    }
    const int stride = scratch.stride;
    std::size_t pass_index = 0;
    while (true) {
        for (int v = 0; v < n; ++v) {
            int* s = scratch.sig.data() + static_cast<std::size_t>(v) * stride;
            s[0] = p.color[static_cast<std::size_t>(v)];
            const auto& nb = g.neighbors(v);
            int i = 1;
            for (int w : nb) s[i++] = p.color[static_cast<std::size_t>(w)];
            while (i < stride) s[i++] = -1;
            std::sort(s + 1, s + 1 + static_cast<std::ptrdiff_t>(nb.size()));
        }
        auto sig_less = [&](int a, int b) {
            const int* sa = scratch.sig.data() + static_cast<std::size_t>(a) * stride;
            const int* sb = scratch.sig.data() + static_cast<std::size_t>(b) * stride;
            return std::lexicographical_compare(sa, sa + stride, sb, sb + stride);
        };
        auto sig_eq = [&](int a, int b) {
            const int* sa = scratch.sig.data() + static_cast<std::size_t>(a) * stride;
            const int* sb = scratch.sig.data() + static_cast<std::size_t>(b) * stride;
            return std::equal(sa, sa + stride, sb);
        };
        for (int v = 0; v < n; ++v) scratch.order[static_cast<std::size_t>(v)] = v;
        std::sort(scratch.order.begin(), scratch.order.end(), sig_less);

        std::uint64_t h = kFnvOffset;
        auto mix = [&h](std::uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ull;
            h *= kFnvPrime;
        };
        int cells = 0;
        for (int i = 0; i < n; ++i) {
            int v = scratch.order[static_cast<std::size_t>(i)];
            bool boundary =
                i == 0 || !sig_eq(v, scratch.order[static_cast<std::size_t>(i - 1)]);
            if (i > 0 && boundary) ++cells;
            if (boundary) {
                mix(static_cast<std::uint64_t>(cells));
                const int* s = scratch.sig.data() + static_cast<std::size_t>(v) * stride;
                for (int t = 0; t < stride; ++t) mix(static_cast<std::uint64_t>(s[t]) + 2);
            }
            scratch.next[static_cast<std::size_t>(v)] = cells;
        }
        ++cells;
        mix(static_cast<std::uint64_t>(cells));

        if (expect) {
            if (pass_index >= expect->size() || (*expect)[pass_index] != h) return false;
        }
        if (trace) trace->push_back(h);
        ++pass_index;

        bool stable = cells == p.num_cells;
        p.color = scratch.next;
        p.num_cells = cells;
        if (stable) break;
    }
    if (expect && pass_index != expect->size()) return false;
    return true;
}

void individualize(Partition& p, int v) {
    for (int& c : p.color) c = 2 * c + 1;
    p.color[static_cast<std::size_t>(v)] -= 1;
    p.num_cells += 1;  // rank normalization happens in the next refine
}

struct RBaseLevel {
    std::vector<int> colors_before;  // partition at entry (prefix individualized)
    int num_cells_before = 0;
    int target_cell = -1;  // color id of the branching cell
    int base_vertex = -1;
    std::vector<std::uint64_t> trace_after;  // per-pass hashes of individualize+refine
};

struct Searcher {
    const CpmGraph& g;
    RefineScratch scratch;
    std::vector<RBaseLevel> rbase;
    std::vector<std::uint64_t> initial_trace;
    std::vector<int> colors_initial;
    int num_cells_initial = 0;
    std::vector<int> identity_leaf;  // vertex at each color of the final partition

    explicit Searcher(const CpmGraph& graph) : g(graph) { build_rbase(); }

    static int first_branch_cell(const Partition& p) {
        std::vector<int> count(static_cast<std::size_t>(p.num_cells), 0);
        for (int c : p.color) ++count[static_cast<std::size_t>(c)];
        for (int c = 0; c < p.num_cells; ++c)
            if (count[static_cast<std::size_t>(c)] > 1) return c;
        return -1;
    }

    void build_rbase() {
        Partition p;
        p.color.assign(static_cast<std::size_t>(g.size()), 0);
        p.num_cells = 1;
        refine(g, p, scratch, &initial_trace, nullptr);
        colors_initial = p.color;
        num_cells_initial = p.num_cells;
        while (true) {
            int cell = first_branch_cell(p);
            if (cell < 0) break;
            RBaseLevel lev;
            lev.colors_before = p.color;
            lev.num_cells_before = p.num_cells;
            lev.target_cell = cell;
            for (int v = 0; v < g.size(); ++v) {
                if (p.color[static_cast<std::size_t>(v)] == cell) {
                    lev.base_vertex = v;
                    break;
                }
            }
            individualize(p, lev.base_vertex);
            refine(g, p, scratch, &lev.trace_after, nullptr);
            rbase.push_back(std::move(lev));
        }
        identity_leaf.assign(static_cast<std::size_t>(g.size()), -1);
        for (int v = 0; v < g.size(); ++v)
            identity_leaf[static_cast<std::size_t>(p.color[static_cast<std::size_t>(v)])] = v;
    }

    // DFS below level j for any leaf compatible with the recorded traces.
    // `side` is g itself for automorphisms or the second graph when looking
    // for an isomorphism; the result always maps g onto side.
    std::optional<Permutation> dfs(std::size_t j, Partition& p, const CpmGraph& side,
                                   RefineScratch& side_scratch) {
        if (j == rbase.size()) {
            if (p.num_cells != g.size()) return std::nullopt;
            std::vector<int> img(static_cast<std::size_t>(g.size()));
            for (int v = 0; v < g.size(); ++v)
                img[static_cast<std::size_t>(identity_leaf[static_cast<std::size_t>(
                    p.color[static_cast<std::size_t>(v)])])] = v;
            Permutation perm{std::move(img)};
            for (int u = 0; u < g.size(); ++u)
                for (int w : g.neighbors(u))
                    if (!side.has_edge(perm[u], perm[w])) return std::nullopt;
            return perm;
        }
        const RBaseLevel& lev = rbase[j];
        for (int u = 0; u < static_cast<int>(p.color.size()); ++u) {
            if (p.color[static_cast<std::size_t>(u)] != lev.target_cell) continue;
            Partition q = p;
            individualize(q, u);
            if (!refine(side, q, side_scratch, nullptr, &lev.trace_after)) continue;
            if (auto res = dfs(j + 1, q, side, side_scratch)) return res;
        }
        return std::nullopt;
    }

    // One automorphism fixing base[0..k) and mapping base[k] to w, if any.
    std::optional<Permutation> find_with(std::size_t k, int w) {
        Partition p;
        p.color = rbase[k].colors_before;
        p.num_cells = rbase[k].num_cells_before;
        individualize(p, w);
        if (!refine(g, p, scratch, nullptr, &rbase[k].trace_after)) return std::nullopt;
        return dfs(k + 1, p, g, scratch);
    }

    PermGroup run() {
        PermGroup group(g.size(), {});
        std::vector<int> base;
        for (const RBaseLevel& lev : rbase) base.push_back(lev.base_vertex);
        group.seed_base(base);
        // Deepest level first: when level k is processed the pointwise
        // stabilizer of base[0..k] is already complete, so skipping
        // candidates inside the known orbit is exact.
        for (std::size_t k1 = rbase.size(); k1-- > 0;) {
            int k = static_cast<int>(k1);
            const RBaseLevel& lev = rbase[k1];
            std::set<int> dead;
            while (true) {
                group.refresh_orbit(k);
                int next = -1;
                for (int u = 0; u < g.size(); ++u) {
                    if (lev.colors_before[static_cast<std::size_t>(u)] != lev.target_cell) continue;
                    if (u == lev.base_vertex || dead.count(u)) continue;
                    if (group.in_fundamental_orbit(k, u)) continue;
                    next = u;
                    break;
                }
                if (next < 0) break;
                if (auto perm = find_with(k1, next)) {
                    group.insert_unchecked(k, *perm);
                } else {
                    dead.insert(next);
                }
            }
        }
        group.refresh_all_orbits();
        return group;
    }
};

}  // namespace

PermGroup automorphism_group(const CpmGraph& g, int max_vertices) {
    if (g.size() > max_vertices)
        throw GraphTooLarge("automorphism_group: graph order " + std::to_string(g.size()) +
                            " exceeds the guard of " + std::to_string(max_vertices));
    Searcher s(g);
    return s.run();
}

std::optional<Permutation> find_graph_isomorphism(const CpmGraph& a, const CpmGraph& b,
                                                  int max_vertices) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.edge_count() != b.edge_count()) return std::nullopt;
    if (a.size() > max_vertices)
        throw GraphTooLarge("find_graph_isomorphism: graph order " + std::to_string(a.size()) +
                            " exceeds the guard of " + std::to_string(max_vertices));
    Searcher s(a);
    Partition p;
    p.color.assign(static_cast<std::size_t>(b.size()), 0);
    p.num_cells = 1;
    RefineScratch b_scratch;
    if (!refine(b, p, b_scratch, nullptr, &s.initial_trace)) return std::nullopt;
    return s.dfs(0, p, b, b_scratch);
}

}  // namespace cpm
