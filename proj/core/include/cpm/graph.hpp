#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpm/modring.hpp"

namespace cpm {

// Defining tuple of a CPM graph. r must be a unit mod n with r^(ms) = +-1.
struct Params {
    i64 m = 1, s = 1, n = 3, r = 1;

    bool operator==(const Params& o) const {
        return m == o.m && s == o.s && n == o.n && r == o.r;
    }
    std::string str() const;
};

// Throws std::invalid_argument unless the tuple is admissible.
void validate_params(const Params& p);

// A vertex <level; coords>: level in Z_(ms), coords an s-tuple over Z_n.
struct Vertex {
    i64 level;
    std::vector<i64> coords;

    bool operator==(const Vertex& o) const { return level == o.level && coords == o.coords; }
    bool operator<(const Vertex& o) const {
        return level != o.level ? level < o.level : coords < o.coords;
    }
    std::string str() const;
};

enum class GraphKind { CpmComponent, CpmFull, PraegerXu };

// Immutable tetravalent graph with a level partition.  Holds either a CPM
// graph (the component of <0;0> or the whole, possibly disconnected, graph)
// or a Praeger-Xu graph PX(t,s) stored in the same <level; coords> shape
// with modulus-2 coordinates.  Vertex indices are in BFS order from the
// lexicographically least seed, ties broken by (level, coords), so every
// downstream permutation array is reproducible.
class CpmGraph {
public:
    int size() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    i64 level(int v) const { return verts_[v].level; }
    const Vertex& vertex(int v) const { return verts_[v]; }
    // Index lookup; throws std::out_of_range if the vertex is not present.
    int index_of(const Vertex& v) const;
    bool contains(const Vertex& v) const;

    const Params& params() const { return params_; }
    GraphKind kind() const { return kind_; }
    bool is_component() const { return kind_ != GraphKind::CpmFull; }
    i64 num_levels() const { return num_levels_; }
    i64 coord_modulus() const { return coord_mod_; }
    i64 coord_count() const { return coord_count_; }
    long long edge_count() const;

    // Vertex index sets V_0 .. V_(ms-1).
    std::vector<std::vector<int>> level_sets() const;

private:
    friend struct CpmGraphBuilder;
    Params params_;
    GraphKind kind_ = GraphKind::CpmComponent;
    i64 num_levels_ = 0;
    i64 coord_mod_ = 0;    // n for CPM graphs, 2 for PX graphs
    i64 coord_count_ = 0;  // s
    std::vector<Vertex> verts_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::uint64_t, int> index_;

    std::uint64_t key(const Vertex& v) const;
};

// The four neighbours <i+1; v +- r^i e_l>, <i-1; v +- r^(i-1) e_l'> of x,
// with l = i mod s and l' = (i-1) mod s; returned sorted and deduplicated.
std::vector<Vertex> neighbors_rule(const Params& p, const Vertex& x);

// Component of <0;0>.  Equals the whole graph when n is odd.
CpmGraph build_component(const Params& p);

// The whole graph on all ms*n^s vertices (disconnected when n is even).
CpmGraph build_full(const Params& p);

// Praeger-Xu graph PX(t,s) on t*2^s vertices, t >= 3.
CpmGraph build_px(i64 t, i64 s);

// msn^s (n odd), ms(n/2)^s (n even, m even), 2ms(n/2)^s (n even, m odd).
i64 component_order(const Params& p);

// Membership of x in the component of <0;0> decided from coordinate
// parities alone; requires n even (the graph is connected otherwise).
bool parity_membership(const Params& p, const Vertex& x);

enum class Attachment { Tight, Loose };

struct RadiusReport {
    i64 radius;
    Attachment attachment;
};

// Radius of the alternating cycles (n or n/2 by parity of n); tightly
// attached exactly when s = 1.
RadiusReport radius_and_attachment(const Params& p);

// Walks the alternating cycle through <0;0> on the built graph and returns
// its length (2 * radius).
i64 alternating_cycle_length(const CpmGraph& g);

// Text exports.  Adjacency format: header "# CPM m s n r |V|" then one line
// "<index>: <neighbor indices>" per vertex; edge list: "u v" per edge.
void write_adjacency(std::ostream& os, const CpmGraph& g);
void write_edge_list(std::ostream& os, const CpmGraph& g);

}  // namespace cpm
