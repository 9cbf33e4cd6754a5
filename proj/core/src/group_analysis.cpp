#include "cpm/group_analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace cpm {

namespace {

// Orbit size of a tuple of points under the generator action.
std::size_t tuple_orbit_size(const std::vector<Permutation>& gens, std::vector<int> start) {
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    seen.insert(start);
    queue.push_back(std::move(start));
    while (!queue.empty()) {
        std::vector<int> cur = queue.front();
        queue.pop_front();
        for (const Permutation& g : gens) {
            std::vector<int> img(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) img[i] = g[cur[i]];
            if (seen.insert(img).second) queue.push_back(std::move(img));
        }
    }
    return seen.size();
}

std::size_t edge_orbit_size(const std::vector<Permutation>& gens, int u, int v) {
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> queue;
    auto canon = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    seen.insert(canon(u, v));
    queue.push_back(canon(u, v));
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (const Permutation& g : gens) {
            auto e = canon(g[a], g[b]);
            if (seen.insert(e).second) queue.push_back(e);
        }
    }
    return seen.size();
}

}  // namespace

TransitivityReport transitivity_report(const PermGroup& group, const CpmGraph& g) {
    if (group.degree() != g.size())
        throw std::invalid_argument("transitivity_report: group degree must match graph order");
    TransitivityReport rep;
    std::vector<Permutation> gens = group.generators();
    if (gens.empty()) gens.push_back(Permutation::identity(g.size()));

    rep.vertex_transitive =
        tuple_orbit_size(gens, {0}) == static_cast<std::size_t>(g.size());

    long long num_edges = g.edge_count();
    int v0 = 0;
    int w0 = g.neighbors(v0).front();
    rep.edge_transitive = edge_orbit_size(gens, v0, w0) == static_cast<std::size_t>(num_edges);

    rep.arc_transitive =
        tuple_orbit_size(gens, {v0, w0}) == static_cast<std::size_t>(2 * num_edges);

    // number of 2-arcs: ordered (x,y,z), x and z distinct neighbors of y
    std::size_t num_two_arcs = 0;
    for (int y = 0; y < g.size(); ++y) {
        std::size_t d = g.neighbors(y).size();
        num_two_arcs += d * (d - 1);
    }
    int x0 = g.neighbors(w0).front() == v0 ? g.neighbors(w0)[1] : g.neighbors(w0).front();
    rep.two_arc_transitive = tuple_orbit_size(gens, {v0, w0, x0}) == num_two_arcs;
    return rep;
}

bool is_block_partition(const PermGroup& group, const std::vector<std::vector<int>>& partition) {
    std::vector<int> part_of(static_cast<std::size_t>(group.degree()), -1);
    for (std::size_t c = 0; c < partition.size(); ++c) {
        for (int v : partition[c]) {
            if (v < 0 || v >= group.degree() || part_of[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("is_block_partition: malformed partition");
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < group.degree(); ++v)
        if (part_of[static_cast<std::size_t>(v)] < 0)
            throw std::invalid_argument("is_block_partition: partition does not cover all points");

    for (const Permutation& g : group.generators()) {
        for (const auto& part : partition) {
            int target = part_of[static_cast<std::size_t>(g[part.front()])];
            for (int v : part)
                if (part_of[static_cast<std::size_t>(g[v])] != target) return false;
        }
    }
    return true;
}

LocalAction local_action_at(const PermGroup& group, const CpmGraph& g, int x) {
    if (x < 0 || x >= g.size()) throw std::out_of_range("local_action_at: bad vertex");
    // Rebase so the stabilizer of x is the first link of the chain.
    PermGroup rebased(group.degree(), group.generators(), {x});
    std::vector<Permutation> stab = rebased.stabilizer_generators(1);

    const std::vector<int>& nbrs = g.neighbors(x);
    int d = static_cast<int>(nbrs.size());
    std::vector<int> slot(static_cast<std::size_t>(g.size()), -1);
    for (int i = 0; i < d; ++i) slot[static_cast<std::size_t>(nbrs[i])] = i;

    std::vector<Permutation> restricted;
    for (const Permutation& s : stab) {
        std::vector<int> img(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            int to = slot[static_cast<std::size_t>(s[nbrs[i]])];
            if (to < 0) throw std::logic_error("local_action_at: stabilizer does not fix the link");
            img[static_cast<std::size_t>(i)] = to;
        }
        restricted.emplace_back(std::move(img));
    }
    if (restricted.empty()) restricted.push_back(Permutation::identity(d));

    std::vector<Permutation> elems = enumerate_elements(restricted, 1 << 20);
    LocalAction act;
    act.order = elems.size();
    act.transitive = tuple_orbit_size(restricted, {0}) == static_cast<std::size_t>(d);
    act.two_transitive =
        d >= 2 && tuple_orbit_size(restricted, {0, 1}) == static_cast<std::size_t>(d * (d - 1));
    return act;
}

bool is_edge_preserving(const CpmGraph& g, const Permutation& perm) {
    if (perm.degree() != g.size()) return false;
    for (int u = 0; u < g.size(); ++u)
        for (int w : g.neighbors(u))
            if (!g.has_edge(perm[u], perm[w])) return false;
    return true;
}

void require_edge_preserving(const CpmGraph& g, const Permutation& perm, const char* name) {
    if (!is_edge_preserving(g, perm))
        throw std::logic_error(std::string(name) + ": permutation does not preserve edges");
}

}  // namespace cpm
