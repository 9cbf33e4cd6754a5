#pragma once

#include <optional>
#include <stdexcept>

#include "cpm/graph.hpp"
#include "cpm/perm_group.hpp"

namespace cpm {

struct GraphTooLarge : std::runtime_error {
    explicit GraphTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Full automorphism group by individualization-refinement backtracking with
// equitable-partition pruning and orbit pruning through an incrementally
// built stabilizer chain.  Deterministic: candidates are tried lowest index
// first, so the generator list is reproducible.  Throws GraphTooLarge above
// max_vertices rather than risk an open-ended search.
PermGroup automorphism_group(const CpmGraph& g, int max_vertices = 1500);

// Edge-preserving bijection between a and b, or nullopt if none exists.
// Same guard as automorphism_group.
std::optional<Permutation> find_graph_isomorphism(const CpmGraph& a, const CpmGraph& b,
                                                  int max_vertices = 1500);

}  // namespace cpm
