#include "cpm/cycles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cpm {

TwoPathKind classify_two_path(const CpmGraph& g, int x, int y, int z) {
    if (g.num_levels() < 3)
        throw std::domain_error("classify_two_path: needs at least three levels");
    if (x == z || !g.has_edge(x, y) || !g.has_edge(y, z))
        throw std::invalid_argument("classify_two_path: not a 2-path");
    i64 lx = g.level(x), ly = g.level(y), lz = g.level(z);
    if (lx != lz) return TwoPathKind::NonAnchor;
    if (lx == mod_reduce(ly - 1, g.num_levels())) return TwoPathKind::PositiveAnchor;
    return TwoPathKind::NegativeAnchor;
}

std::string canonical_trace_code(const std::string& code) {
    if (code.empty()) throw std::invalid_argument("canonical_trace_code: empty code");
    std::string best;
    for (int refl = 0; refl < 2; ++refl) {
        std::string base = code;
        if (refl) std::reverse(base.begin(), base.end());
        for (std::size_t k = 0; k < base.size(); ++k) {
            std::string rot = base.substr(k) + base.substr(0, k);
            if (best.empty() || rot < best) best = std::move(rot);
        }
    }
    return best;
}

i64 trace_disbalancedness(const std::string& code) {
    std::size_t first_a = code.find('a');
    if (first_a == std::string::npos) return static_cast<i64>(code.size());
    std::string rot = code.substr(first_a) + code.substr(0, first_a);
    // rot = a n^(k_1) a n^(k_2) ... ; alternating sum of the k_j
    i64 sum = 0;
    int sign = -1;
    i64 run = 0;
    for (std::size_t i = 1; i < rot.size(); ++i) {
        if (rot[i] == 'a') {
            sum += sign * run;
            sign = -sign;
            run = 0;
        } else {
            ++run;
        }
    }
    sum += sign * run;
    return sum < 0 ? -sum : sum;
}

Trace make_trace(const std::string& code) {
    Trace t;
    t.canonical_code = canonical_trace_code(code);
    t.length = static_cast<int>(code.size());
    t.disbalancedness = trace_disbalancedness(t.canonical_code);
    return t;
}

namespace {

std::string code_of_cycle(const CpmGraph& g, const std::vector<int>& cycle) {
    const std::size_t len = cycle.size();
    std::string code(len, '?');
    const i64 ms = g.num_levels();
    for (std::size_t t = 0; t < len; ++t) {
        i64 prev = g.level(cycle[(t + len - 1) % len]);
        i64 next = g.level(cycle[(t + 1) % len]);
        code[t] = prev == next ? 'a' : 'n';
    }
    (void)ms;
    return code;
}

void validate_cycle(const CpmGraph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("not a cycle: too short");
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("not a cycle: repeated vertex");
    for (std::size_t t = 0; t < cycle.size(); ++t)
        if (!g.has_edge(cycle[t], cycle[(t + 1) % cycle.size()]))
            throw std::invalid_argument("not a cycle: missing edge");
}

}  // namespace

Trace trace_of_cycle(const CpmGraph& g, const std::vector<int>& cycle) {
    if (g.num_levels() < 3)
        throw std::domain_error("trace_of_cycle: needs at least three levels");
    validate_cycle(g, cycle);
    return make_trace(code_of_cycle(g, cycle));
}

std::vector<int> generic_eight_cycle(const CpmGraph& g) {
    const Params& p = g.params();
    if (g.kind() == GraphKind::PraegerXu)
        throw std::domain_error("generic_eight_cycle: CPM graphs only");
    if (p.m * p.s < 3) throw std::domain_error("generic_eight_cycle: needs ms >= 3");
    auto vert = [&](i64 lev, i64 c0, i64 c1) {
        Vertex v{mod_reduce(lev, p.m * p.s), std::vector<i64>(static_cast<std::size_t>(p.s), 0)};
        v.coords[0] = mod_reduce(c0, p.n);
        if (p.s >= 2) v.coords[1] = mod_reduce(c1, p.n);
        return v;
    };
    if (p.s < 2) throw std::domain_error("generic_eight_cycle: needs s >= 2");
    i64 r = p.r;
    std::vector<Vertex> verts = {
        vert(0, 0, 0),          vert(1, 1, 0),           vert(2, 1, r),
        vert(1, 1, 2 * r),      vert(0, 0, 2 * r),       vert(1, -1, 2 * r),
        vert(2, -1, r),         vert(1, -1, 0),
    };
    std::vector<int> cycle;
    for (const Vertex& v : verts) cycle.push_back(g.index_of(v));
    validate_cycle(g, cycle);
    return cycle;
}

std::vector<CycleRecord> enumerate_cycles(const CpmGraph& g, int max_len) {
    if (max_len > kMaxCycleLength)
        throw std::invalid_argument("enumerate_cycles: max_len capped at 10");
    std::vector<CycleRecord> out;
    if (max_len < 3) return out;
    std::vector<char> on_path(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> path;
    // Each cycle appears exactly once: smallest vertex first, and the
    // direction with the smaller second vertex.
    auto dfs = [&](auto&& self, int root) -> void {
        int u = path.back();
        for (int w : g.neighbors(u)) {
            if (w == root && path.size() >= 3) {
                if (path[1] < path.back()) {
                    CycleRecord rec;
                    rec.vertices = path;
                    rec.trace = g.num_levels() >= 3 ? make_trace(code_of_cycle(g, path)) : Trace{};
                    out.push_back(std::move(rec));
                }
            } else if (w > root && !on_path[static_cast<std::size_t>(w)] &&
                       static_cast<int>(path.size()) < max_len) {
                on_path[static_cast<std::size_t>(w)] = 1;
                path.push_back(w);
                self(self, root);
                path.pop_back();
                on_path[static_cast<std::size_t>(w)] = 0;
            }
        }
    };
    for (int v = 0; v < g.size(); ++v) {
        path.assign(1, v);
        on_path[static_cast<std::size_t>(v)] = 1;
        dfs(dfs, v);
        on_path[static_cast<std::size_t>(v)] = 0;
    }
    return out;
}

long long count_cycles_through(const CpmGraph& g, int x, int y, int z, int max_len,
                               const std::optional<Trace>& trace_filter) {
    if (x == z || !g.has_edge(x, y) || !g.has_edge(y, z))
        throw std::invalid_argument("count_cycles_through: not a 2-path");
    if (max_len > kMaxCycleLength)
        throw std::invalid_argument("count_cycles_through: max_len capped at 10");
    // Simple paths z -> ... -> x avoiding y; each cycle through the 2-path
    // corresponds to exactly one such path.
    long long count = 0;
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = 1;
    used[static_cast<std::size_t>(z)] = 1;
    std::vector<int> inner;
    auto dfs = [&](auto&& self, int u, int edges_so_far) -> void {
        for (int w : g.neighbors(u)) {
            int cycle_len = edges_so_far + 1 + 2;
            if (w == x) {
                if (cycle_len >= 3 && cycle_len <= max_len) {
                    if (!trace_filter) {
                        ++count;
                    } else {
                        std::vector<int> cyc = {y, z};
                        cyc.insert(cyc.end(), inner.begin(), inner.end());
                        cyc.push_back(x);
                        if (make_trace(code_of_cycle(g, cyc)) == *trace_filter) ++count;
                    }
                }
            } else if (!used[static_cast<std::size_t>(w)] && cycle_len < max_len) {
                used[static_cast<std::size_t>(w)] = 1;
                inner.push_back(w);
                self(self, w, edges_so_far + 1);
                inner.pop_back();
                used[static_cast<std::size_t>(w)] = 0;
            }
        }
    };
    dfs(dfs, z, 0);
    return count;
}

namespace {

// Visits every cycle of length <= max_len containing the 2-path (x,y,z)
// exactly once, as a vertex list starting (y, z, ..., x).
template <typename Fn>
void for_each_cycle_through(const CpmGraph& g, int x, int y, int z, int max_len, Fn&& fn) {
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = 1;
    used[static_cast<std::size_t>(z)] = 1;
    std::vector<int> cyc = {y, z};
    auto dfs = [&](auto&& self, int u, int edges_so_far) -> void {
        for (int w : g.neighbors(u)) {
            int cycle_len = edges_so_far + 1 + 2;
            if (w == x) {
                if (cycle_len >= 3 && cycle_len <= max_len) {
                    cyc.push_back(x);
                    fn(cyc);
                    cyc.pop_back();
                }
            } else if (!used[static_cast<std::size_t>(w)] && cycle_len < max_len) {
                used[static_cast<std::size_t>(w)] = 1;
                cyc.push_back(w);
                self(self, w, edges_so_far + 1);
                cyc.pop_back();
                used[static_cast<std::size_t>(w)] = 0;
            }
        }
    };
    dfs(dfs, z, 0);
}

}  // namespace

std::map<std::pair<int, Trace>, TraceStats> cycle_census(const CpmGraph& g, int max_len) {
    std::map<std::pair<int, Trace>, TraceStats> stats;
    std::vector<CycleRecord> cycles = enumerate_cycles(g, max_len);
    for (const CycleRecord& rec : cycles) {
        TraceStats& st = stats[{static_cast<int>(rec.vertices.size()), rec.trace}];
        ++st.total;
    }
    if (g.num_levels() < 3) return stats;

    // incidence counts per 2-path, split anchors vs non-anchors
    std::map<std::pair<int, Trace>, long long> bucket;
    for (int y = 0; y < g.size(); ++y) {
        const auto& nb = g.neighbors(y);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                bool anchor = classify_two_path(g, nb[i], y, nb[j]) != TwoPathKind::NonAnchor;
                bucket.clear();
                for_each_cycle_through(g, nb[i], y, nb[j], max_len,
                                       [&](const std::vector<int>& cyc) {
                                           Trace t = make_trace(code_of_cycle(g, cyc));
                                           ++bucket[{static_cast<int>(cyc.size()), t}];
                                       });
                for (auto& [key, st] : stats) {
                    auto it = bucket.find(key);
                    long long c = it == bucket.end() ? 0 : it->second;
                    long long& mn = anchor ? st.anchor_min : st.non_anchor_min;
                    long long& mx = anchor ? st.anchor_max : st.non_anchor_max;
                    if (mn < 0 || c < mn) mn = c;
                    if (mx < 0 || c > mx) mx = c;
                }
            }
        }
    }
    return stats;
}

std::string cycle_census_table(const CpmGraph& g, int max_len) {
    auto stats = cycle_census(g, max_len);
    std::ostringstream os;
    os << "trace           length  total   per-anchor  per-non-anchor\n";
    auto range = [](long long mn, long long mx) {
        if (mn < 0) return std::string("-");
        if (mn == mx) return std::to_string(mn);
        return std::to_string(mn) + ".." + std::to_string(mx);
    };
    for (const auto& [key, st] : stats) {
        std::string code = key.second.canonical_code;
        os << code << std::string(code.size() < 15 ? 15 - code.size() : 1, ' ') << " "
           << key.first << "       " << st.total << "       "
           << range(st.anchor_min, st.anchor_max) << "           "
           << range(st.non_anchor_min, st.non_anchor_max) << "\n";
    }
    return os.str();
}

std::vector<unsigned long long> closed_walk_counts(const CpmGraph& g, int max_len) {
    std::vector<unsigned long long> totals(static_cast<std::size_t>(max_len), 0);
    std::vector<unsigned long long> cur(static_cast<std::size_t>(g.size()));
    std::vector<unsigned long long> nxt(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) {
        std::fill(cur.begin(), cur.end(), 0ull);
        cur[static_cast<std::size_t>(v)] = 1;
        for (int len = 1; len <= max_len; ++len) {
            std::fill(nxt.begin(), nxt.end(), 0ull);
            for (int u = 0; u < g.size(); ++u) {
                unsigned long long c = cur[static_cast<std::size_t>(u)];
                if (!c) continue;
                for (int w : g.neighbors(u)) nxt[static_cast<std::size_t>(w)] += c;
            }
            totals[static_cast<std::size_t>(len - 1)] += nxt[static_cast<std::size_t>(v)];
            cur.swap(nxt);
        }
    }
    return totals;
}

}  // namespace cpm
