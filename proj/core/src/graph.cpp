#include "cpm/graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cpm {

std::string Params::str() const {
    std::ostringstream os;
    os << "CPM(" << m << "," << s << "," << n << ";" << r << ")";
    return os.str();
}

std::string Vertex::str() const {
    std::ostringstream os;
    os << "<" << level << ";(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i];
    }
    os << ")>";
    return os.str();
}

void validate_params(const Params& p) {
    if (p.m < 1 || p.s < 1) throw std::invalid_argument("params: m and s must be positive");
    if (p.n < 3) throw std::invalid_argument("params: n must be at least 3");
    if (!is_unit(p.r, p.n)) throw std::invalid_argument("params: r must be a unit mod n");
    if (!is_valid_r(p.m, p.s, p.n, p.r))
        throw std::invalid_argument("params: r^(ms) must be +-1 mod n");
}

std::uint64_t CpmGraph::key(const Vertex& v) const {
    std::uint64_t k = static_cast<std::uint64_t>(v.level);
    for (i64 c : v.coords) k = k * static_cast<std::uint64_t>(coord_mod_) + static_cast<std::uint64_t>(c);
    return k;
}

bool CpmGraph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int CpmGraph::index_of(const Vertex& v) const {
    auto it = index_.find(key(v));
    if (it == index_.end()) throw std::out_of_range("CpmGraph: vertex not in graph: " + v.str());
    return it->second;
}

bool CpmGraph::contains(const Vertex& v) const {
    if (v.level < 0 || v.level >= num_levels_) return false;
    if (static_cast<i64>(v.coords.size()) != coord_count_) return false;
    for (i64 c : v.coords)
        if (c < 0 || c >= coord_mod_) return false;
    return index_.count(key(v)) > 0;
}

long long CpmGraph::edge_count() const {
    long long total = 0;
    for (const auto& a : adj_) total += static_cast<long long>(a.size());
    return total / 2;
}

std::vector<std::vector<int>> CpmGraph::level_sets() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(num_levels_));
    for (int v = 0; v < size(); ++v) out[static_cast<std::size_t>(level(v))].push_back(v);
    return out;
}

std::vector<Vertex> neighbors_rule(const Params& p, const Vertex& x) {
    validate_params(p);
    const i64 ms = p.m * p.s;
    if (x.level < 0 || x.level >= ms || static_cast<i64>(x.coords.size()) != p.s)
        throw std::invalid_argument("neighbors_rule: malformed vertex");
    std::set<Vertex> out;
    for (int dir = 0; dir < 2; ++dir) {
        i64 src_level = dir == 0 ? x.level : mod_reduce(x.level - 1, ms);
        i64 dst_level = dir == 0 ? mod_reduce(x.level + 1, ms) : src_level;
        i64 ell = src_level % p.s;
        i64 step = mod_pow(p.r, src_level, p.n);
        for (int sign : {1, -1}) {
            Vertex w{dst_level, x.coords};
            w.coords[static_cast<std::size_t>(ell)] =
                mod_add(w.coords[static_cast<std::size_t>(ell)], sign * step, p.n);
            out.insert(std::move(w));
        }
    }
    return {out.begin(), out.end()};
}

// Grants the free builder functions access to the internals.
struct CpmGraphBuilder {
    static CpmGraph shell(const Params& p, GraphKind kind) {
        validate_params(p);
        CpmGraph g;
        g.params_ = p;
        g.kind_ = kind;
        g.num_levels_ = p.m * p.s;
        g.coord_mod_ = p.n;
        g.coord_count_ = p.s;
        return g;
    }

    static CpmGraph px_shell(i64 t, i64 s) {
        CpmGraph g;
        g.kind_ = GraphKind::PraegerXu;
        g.params_ = Params{t, s, 0, 0};  // placeholder; PX graphs carry no modulus
        g.num_levels_ = t;
        g.coord_mod_ = 2;
        g.coord_count_ = s;
        return g;
    }

    // BFS closure of the given seeds under the neighbor map; deterministic:
    // seeds in order, neighbor expansion in (level, coords) order.
    template <typename NeighborFn>
    static void bfs_fill(CpmGraph& g, const std::vector<Vertex>& seeds, NeighborFn nbrs) {
    std::deque<int> queue;
    auto intern = [&](const Vertex& v) -> int {
        auto [it, fresh] = g.index_.try_emplace(g.key(v), static_cast<int>(g.verts_.size()));
        if (fresh) {
            g.verts_.push_back(v);
            queue.push_back(it->second);
        }
        return it->second;
    };
    for (const Vertex& seed : seeds) intern(seed);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        Vertex cur = g.verts_[static_cast<std::size_t>(u)];
        for (const Vertex& w : nbrs(cur)) intern(w);
    }
    g.adj_.resize(g.verts_.size());
    for (std::size_t u = 0; u < g.verts_.size(); ++u) {
        std::vector<int> a;
        for (const Vertex& w : nbrs(g.verts_[u])) a.push_back(g.index_.at(g.key(w)));
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.adj_[u] = std::move(a);
    }
}

};

CpmGraph build_component(const Params& p) {
    CpmGraph g = CpmGraphBuilder::shell(p, GraphKind::CpmComponent);
    Vertex zero{0, std::vector<i64>(static_cast<std::size_t>(p.s), 0)};
    CpmGraphBuilder::bfs_fill(g, {zero}, [&](const Vertex& v) { return neighbors_rule(p, v); });
    return g;
}

CpmGraph build_full(const Params& p) {
    CpmGraph g = CpmGraphBuilder::shell(p, GraphKind::CpmFull);
    std::vector<Vertex> seeds;
    std::vector<i64> coords(static_cast<std::size_t>(p.s), 0);
    for (i64 lev = 0; lev < p.m * p.s; ++lev) {
        coords.assign(static_cast<std::size_t>(p.s), 0);
        while (true) {
            seeds.push_back(Vertex{lev, coords});
            std::size_t pos = coords.size();
            while (pos > 0 && coords[pos - 1] == p.n - 1) coords[--pos] = 0;
            if (pos == 0) break;
            ++coords[pos - 1];
        }
    }
    CpmGraphBuilder::bfs_fill(g, seeds, [&](const Vertex& v) { return neighbors_rule(p, v); });
    return g;
}

CpmGraph build_px(i64 t, i64 s) {
    if (t < 3) throw std::invalid_argument("build_px: t must be at least 3");
    if (s < 1) throw std::invalid_argument("build_px: s must be positive");
    CpmGraph g = CpmGraphBuilder::px_shell(t, s);
    auto nbrs = [t, s](const Vertex& x) {
        std::set<Vertex> out;
        // forward: drop the first bit, append 0 or 1
        for (i64 b : {0, 1}) {
            Vertex w{mod_reduce(x.level + 1, t), {}};
            w.coords.assign(x.coords.begin() + 1, x.coords.end());
            w.coords.push_back(b);
            out.insert(std::move(w));
        }
        // backward: drop the last bit, prepend 0 or 1
        for (i64 b : {0, 1}) {
            Vertex w{mod_reduce(x.level - 1, t), {}};
            w.coords.push_back(b);
            w.coords.insert(w.coords.end(), x.coords.begin(), x.coords.end() - 1);
            out.insert(std::move(w));
        }
        (void)s;
        return std::vector<Vertex>(out.begin(), out.end());
    };
    Vertex zero{0, std::vector<i64>(static_cast<std::size_t>(s), 0)};
    CpmGraphBuilder::bfs_fill(g, {zero}, nbrs);
    return g;
}

i64 component_order(const Params& p) {
    validate_params(p);
    auto checked_pow = [](i64 base, i64 e) {
        i64 acc = 1;
        for (i64 k = 0; k < e; ++k) {
            if (acc > (i64{1} << 62) / base) throw std::overflow_error("component_order: overflow");
            acc *= base;
        }
        return acc;
    };
    if (p.n % 2 == 1) return p.m * p.s * checked_pow(p.n, p.s);
    i64 half = checked_pow(p.n / 2, p.s);
    return (p.m % 2 == 0 ? 1 : 2) * p.m * p.s * half;
}

bool parity_membership(const Params& p, const Vertex& x) {
    validate_params(p);
    if (p.n % 2 == 1) throw std::domain_error("parity_membership: graph is connected (n odd)");
    const i64 ms = p.m * p.s;
    if (x.level < 0 || x.level >= ms || static_cast<i64>(x.coords.size()) != p.s)
        throw std::invalid_argument("parity_membership: malformed vertex");
    // Walking up from level 0 to level i uses each label l exactly
    // #{0 <= j < i : j = l (mod s)} times and every step flips one parity.
    auto pattern_bit = [&](i64 ell, i64 lev) {
        i64 count = 0;
        if (lev > ell) count = (lev - ell - 1) / p.s + 1;
        return count % 2;
    };
    bool match = true, complement = true;
    for (i64 ell = 0; ell < p.s; ++ell) {
        i64 bit = mod_reduce(x.coords[static_cast<std::size_t>(ell)], 2);
        i64 want = pattern_bit(ell, x.level);
        if (bit != want) match = false;
        if (bit != 1 - want) complement = false;
    }
    // m even: the pattern is exact; m odd: a full turn around the level
    // cycle flips every coordinate, so the complement is reachable too.
    if (p.m % 2 == 0) return match;
    return match || complement;
}

RadiusReport radius_and_attachment(const Params& p) {
    validate_params(p);
    RadiusReport rep;
    rep.radius = p.n % 2 == 1 ? p.n : p.n / 2;
    rep.attachment = p.s == 1 ? Attachment::Tight : Attachment::Loose;
    return rep;
}

i64 alternating_cycle_length(const CpmGraph& g) {
    if (g.kind() == GraphKind::PraegerXu)
        throw std::domain_error("alternating_cycle_length: CPM graphs only");
    const Params& p = g.params();
    const i64 ms = p.m * p.s;
    // Orient every edge from V_i to V_(i+1).  The alternating cycle through
    // the arc (<0;0>, <1;e_0>) zigzags between two adjacent levels: at each
    // step continue to the unique other neighbor lying in the previous
    // vertex's level.
    Vertex zero{0, std::vector<i64>(static_cast<std::size_t>(p.s), 0)};
    int u0 = g.index_of(zero);
    int u1 = -1;
    for (int w : g.neighbors(u0)) {
        if (g.level(w) == mod_reduce(1, ms)) {
            u1 = w;
            break;
        }
    }
    if (u1 < 0) throw std::logic_error("alternating_cycle_length: no upward edge");
    int prev = u0, cur = u1;
    i64 len = 1;
    while (true) {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (w != prev && g.level(w) == g.level(prev)) {
                next = w;
                break;
            }
        }
        if (next < 0) throw std::logic_error("alternating_cycle_length: walk broke");
        prev = cur;
        cur = next;
        ++len;
        if (prev == u0 && cur == u1) return len - 1;
        if (len > 4 * static_cast<i64>(g.size()))
            throw std::logic_error("alternating_cycle_length: walk did not close");
    }
}

void write_adjacency(std::ostream& os, const CpmGraph& g) {
    if (g.kind() == GraphKind::PraegerXu) {
        os << "# PX " << g.num_levels() << " " << g.coord_count() << " " << g.size() << "\n";
    } else {
        const Params& p = g.params();
        os << "# CPM " << p.m << " " << p.s << " " << p.n << " " << p.r << " " << g.size() << "\n";
    }
    for (int v = 0; v < g.size(); ++v) {
        os << v << ":";
        for (int w : g.neighbors(v)) os << " " << w;
        os << "\n";
    }
}

void write_edge_list(std::ostream& os, const CpmGraph& g) {
    for (int v = 0; v < g.size(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) os << v << " " << w << "\n";
}

}  // namespace cpm
