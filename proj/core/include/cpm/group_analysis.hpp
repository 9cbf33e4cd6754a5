#pragma once

#include <vector>

#include "cpm/graph.hpp"
#include "cpm/perm_group.hpp"

namespace cpm {

struct TransitivityReport {
    bool vertex_transitive = false;
    bool edge_transitive = false;
    bool arc_transitive = false;
    bool two_arc_transitive = false;

    bool operator==(const TransitivityReport& o) const {
        return vertex_transitive == o.vertex_transitive && edge_transitive == o.edge_transitive &&
               arc_transitive == o.arc_transitive && two_arc_transitive == o.two_arc_transitive;
    }
};

// Orbit computations on vertices, unordered edges, arcs and 2-arcs.
TransitivityReport transitivity_report(const PermGroup& group, const CpmGraph& g);

// True iff every generator maps every part of the partition onto a part.
// Throws std::invalid_argument if the parts do not cover 0..degree-1 exactly.
bool is_block_partition(const PermGroup& group, const std::vector<std::vector<int>>& partition);

struct LocalAction {
    std::uint64_t order = 1;       // order of the stabilizer restricted to the neighbors
    bool transitive = false;       // transitive on the 4 neighbors
    bool two_transitive = false;   // transitive on ordered pairs of distinct neighbors
};

// Action of the stabilizer of x on the neighbors of x.
LocalAction local_action_at(const PermGroup& group, const CpmGraph& g, int x);

// True iff the permutation maps edges to edges (exhaustive scan).
bool is_edge_preserving(const CpmGraph& g, const Permutation& perm);

// Throws std::logic_error mentioning `name` unless perm preserves edges.
void require_edge_preserving(const CpmGraph& g, const Permutation& perm, const char* name);

}  // namespace cpm
