#pragma once

#include <vector>

#include "cpm/bigint.hpp"
#include "cpm/permutation.hpp"

namespace cpm {

// Permutation group given by generators, maintained as a base and strong
// generating set (Schreier-Sims).  The base is deterministic: an optional
// hint prefix, then smallest moved points, so identical input always yields
// identical chains.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Permutation> generators,
              std::vector<int> base_hint = {});

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return input_gens_; }
    std::vector<Permutation> strong_generators() const;

    BigUint order() const;
    bool contains(const Permutation& g) const;

    std::vector<int> base() const;
    int num_levels() const { return static_cast<int>(levels_.size()); }
    int base_point(int k) const { return levels_[static_cast<std::size_t>(k)].b; }
    const std::vector<int>& fundamental_orbit(int k) const {
        return levels_[static_cast<std::size_t>(k)].orbit;
    }
    bool in_fundamental_orbit(int k, int p) const {
        return levels_[static_cast<std::size_t>(k)].pos[static_cast<std::size_t>(p)] >= 0;
    }
    // Element u of the group with u[base(k)] = p.
    const Permutation& transversal(int k, int p) const;
    // Strong generators fixing base[0..k) pointwise; generates that stabilizer.
    std::vector<Permutation> stabilizer_generators(int k) const;

    // Adds a generator, restoring the strong generating property.  Returns
    // false if the element was already a member.
    bool extend(const Permutation& g);

    // Trusted insertion for the automorphism search, which establishes the
    // chain property by exhaustion instead of Schreier closure: g must fix
    // base[0..k) and move base[k].  Only orbits at levels <= k go stale;
    // refresh_orbit / refresh_all_orbits recompute them.
    void seed_base(const std::vector<int>& base);
    void insert_unchecked(int k, const Permutation& g);
    void refresh_orbit(int k);
    void refresh_all_orbits();

    // Recheck the Schreier condition on every level; throws std::logic_error
    // if the chain is inconsistent.  Test aid for the trusted path.
    void verify_chain() const;

    // All group elements; throws std::runtime_error if the order exceeds limit.
    std::vector<Permutation> elements(std::uint64_t limit) const;

private:
    struct Level {
        int b = -1;
        std::vector<Permutation> gens;  // strong generators first stuck here
        std::vector<int> orbit;         // fundamental orbit, BFS order
        std::vector<int> pos;           // inverse of orbit, -1 when absent
        std::vector<Permutation> trans; // explicit transversal per orbit point
    };

    int degree_ = 0;
    std::vector<Permutation> input_gens_;
    std::vector<int> base_hint_;
    std::vector<Level> levels_;

    // gens of levels >= k, i.e. the strong generators fixing base[0..k)
    void for_each_stab_gen(int k, const auto& fn) const;
    int ensure_level(int k, const Permutation& incoming);
    // strips g (which fixes base[0..k)) through levels k..; returns stuck
    // level (levels_.size() if it ran off the end) and leaves residue in g
    int sift(Permutation& g, int k, bool allow_new_level);
    void close_from(int start);
};

// Order of the group generated by the given permutations.
// Throws std::invalid_argument on degree mismatch.
BigUint group_order(const std::vector<Permutation>& gens);

// All elements generated by gens (BFS closure); throws if more than limit.
std::vector<Permutation> enumerate_elements(const std::vector<Permutation>& gens,
                                            std::uint64_t limit);

}  // namespace cpm
