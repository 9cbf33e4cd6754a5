#include "cpm/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace cpm {

void PermGroup::for_each_stab_gen(int k, const auto& fn) const {
    for (std::size_t j = static_cast<std::size_t>(k); j < levels_.size(); ++j)
        for (const Permutation& g : levels_[j].gens) fn(g);
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_hint)
    : degree_(degree), input_gens_(std::move(generators)), base_hint_(std::move(base_hint)) {
    for (const Permutation& g : input_gens_)
        if (g.degree() != degree_) throw std::invalid_argument("PermGroup: degree mismatch");
    for (const Permutation& g : input_gens_) extend(g);
}

std::vector<Permutation> PermGroup::strong_generators() const {
    std::vector<Permutation> out;
    for_each_stab_gen(0, [&](const Permutation& g) { out.push_back(g); });
    return out;
}

BigUint PermGroup::order() const {
    BigUint o(1);
    for (const Level& lev : levels_) o *= static_cast<std::uint64_t>(lev.orbit.size());
    return o;
}

std::vector<int> PermGroup::base() const {
    std::vector<int> b;
    for (const Level& lev : levels_) b.push_back(lev.b);
    return b;
}

const Permutation& PermGroup::transversal(int k, int p) const {
    const Level& lev = levels_[static_cast<std::size_t>(k)];
    int at = lev.pos[static_cast<std::size_t>(p)];
    if (at < 0) throw std::out_of_range("PermGroup::transversal: point not in orbit");
    return lev.trans[static_cast<std::size_t>(at)];
}

std::vector<Permutation> PermGroup::stabilizer_generators(int k) const {
    std::vector<Permutation> out;
    for_each_stab_gen(k, [&](const Permutation& g) { out.push_back(g); });
    return out;
}

int PermGroup::ensure_level(int k, const Permutation& incoming) {
    while (static_cast<int>(levels_.size()) <= k) {
        Level lev;
        std::size_t depth = levels_.size();
        if (depth < base_hint_.size()) {
            lev.b = base_hint_[depth];
        } else {
            lev.b = -1;
            for (int x = 0; x < degree_; ++x) {
                if (incoming[x] != x) {
                    bool used = false;
                    for (const Level& other : levels_)
                        if (other.b == x) used = true;
                    if (!used) {
                        lev.b = x;
                        break;
                    }
                }
            }
            if (lev.b < 0) throw std::logic_error("PermGroup: no base point available");
        }
        lev.pos.assign(static_cast<std::size_t>(degree_), -1);
        lev.orbit.push_back(lev.b);
        lev.pos[static_cast<std::size_t>(lev.b)] = 0;
        lev.trans.push_back(Permutation::identity(degree_));
        levels_.push_back(std::move(lev));
    }
    return k;
}

void PermGroup::refresh_orbit(int k) {
    Level& lev = levels_[static_cast<std::size_t>(k)];
    lev.orbit.assign(1, lev.b);
    lev.pos.assign(static_cast<std::size_t>(degree_), -1);
    lev.pos[static_cast<std::size_t>(lev.b)] = 0;
    lev.trans.assign(1, Permutation::identity(degree_));
    for (std::size_t at = 0; at < lev.orbit.size(); ++at) {
        int p = lev.orbit[at];
        for_each_stab_gen(k, [&](const Permutation& g) {
            int q = g[p];
            if (lev.pos[static_cast<std::size_t>(q)] < 0) {
                lev.pos[static_cast<std::size_t>(q)] = static_cast<int>(lev.orbit.size());
                lev.orbit.push_back(q);
                lev.trans.push_back(lev.trans[at].then(g));
            }
        });
    }
}

void PermGroup::refresh_all_orbits() {
    for (int k = static_cast<int>(levels_.size()); k-- > 0;) refresh_orbit(k);
}

int PermGroup::sift(Permutation& g, int k, bool allow_new_level) {
    while (true) {
        if (g.is_identity()) return -1;
        if (k >= static_cast<int>(levels_.size())) {
            if (!allow_new_level) return k;
            ensure_level(k, g);
        }
        const Level& lev = levels_[static_cast<std::size_t>(k)];
        int t = g[lev.b];
        if (t == lev.b) {
            ++k;
            continue;
        }
        int at = lev.pos[static_cast<std::size_t>(t)];
        if (at < 0) return k;
        g = g.then(lev.trans[static_cast<std::size_t>(at)].inverse());
        ++k;
    }
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup::contains: degree mismatch");
    Permutation h = g;
    int stuck = const_cast<PermGroup*>(this)->sift(h, 0, false);
    return stuck < 0;
}

bool PermGroup::extend(const Permutation& g) {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup::extend: degree mismatch");
    Permutation res = g;
    int stuck = sift(res, 0, true);
    if (stuck < 0) return false;
    ensure_level(stuck, res);
    levels_[static_cast<std::size_t>(stuck)].gens.push_back(res);
    close_from(stuck);
    return true;
}

// Re-establish the Schreier condition working from the deepest affected
// level back to the top.  Whenever a Schreier generator fails to sift, its
// residue becomes a new strong generator at the level where it got stuck
// and verification restarts there.
void PermGroup::close_from(int start) {
    int k = start;
    while (k >= 0) {
        refresh_orbit(k);
        std::vector<Permutation> gens_here;
        for_each_stab_gen(k, [&](const Permutation& g) { gens_here.push_back(g); });
        std::size_t orbit_size = levels_[static_cast<std::size_t>(k)].orbit.size();
        bool dirty = false;
        for (std::size_t at = 0; at < orbit_size && !dirty; ++at) {
            for (const Permutation& h : gens_here) {
                const Level& lev = levels_[static_cast<std::size_t>(k)];
                int p = lev.orbit[at];
                int q = h[p];
                Permutation schreier = lev.trans[at].then(h).then(
                    lev.trans[static_cast<std::size_t>(lev.pos[static_cast<std::size_t>(q)])]
                        .inverse());
                int stuck = sift(schreier, k + 1, true);
                if (stuck >= 0) {
                    ensure_level(stuck, schreier);
                    levels_[static_cast<std::size_t>(stuck)].gens.push_back(schreier);
                    k = stuck;
                    dirty = true;
                    break;
                }
            }
        }
        if (!dirty) --k;
    }
}

void PermGroup::seed_base(const std::vector<int>& base) {
    if (!levels_.empty()) throw std::logic_error("PermGroup::seed_base: group not empty");
    base_hint_ = base;
    for (std::size_t k = 0; k < base.size(); ++k) ensure_level(static_cast<int>(k), Permutation());
}

void PermGroup::insert_unchecked(int k, const Permutation& g) {
    if (k < 0 || k >= static_cast<int>(levels_.size()))
        throw std::out_of_range("PermGroup::insert_unchecked: bad level");
    input_gens_.push_back(g);
    levels_[static_cast<std::size_t>(k)].gens.push_back(g);
}

void PermGroup::verify_chain() const {
    for (int k = static_cast<int>(levels_.size()); k-- > 0;) {
        const Level& lev = levels_[static_cast<std::size_t>(k)];
        // orbit closure
        for (std::size_t at = 0; at < lev.orbit.size(); ++at) {
            int p = lev.orbit[at];
            for_each_stab_gen(k, [&](const Permutation& g) {
                if (lev.pos[static_cast<std::size_t>(g[p])] < 0)
                    throw std::logic_error("PermGroup::verify_chain: orbit not closed");
            });
        }
        // Schreier condition
        for (std::size_t at = 0; at < lev.orbit.size(); ++at) {
            int p = lev.orbit[at];
            bool bad = false;
            for_each_stab_gen(k, [&](const Permutation& h) {
                if (bad) return;
                int q = h[p];
                Permutation schreier = lev.trans[at].then(h).then(
                    lev.trans[static_cast<std::size_t>(lev.pos[static_cast<std::size_t>(q)])]
                        .inverse());
                Permutation res = schreier;
                int stuck = const_cast<PermGroup*>(this)->sift(res, k + 1, false);
                if (stuck >= 0) bad = true;
            });
            if (bad) throw std::logic_error("PermGroup::verify_chain: Schreier condition fails");
        }
    }
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
    BigUint o = order();
    if (!o.fits_u64() || o.as_u64() > limit)
        throw std::runtime_error("PermGroup::elements: order exceeds limit");
    std::vector<Permutation> gens = strong_generators();
    if (gens.empty()) gens.push_back(Permutation::identity(degree_));
    return enumerate_elements(gens, limit);
}

BigUint group_order(const std::vector<Permutation>& gens) {
    if (gens.empty()) return BigUint(1);
    int deg = gens.front().degree();
    for (const Permutation& g : gens)
        if (g.degree() != deg) throw std::invalid_argument("group_order: degree mismatch");
    return PermGroup(deg, gens).order();
}

std::vector<Permutation> enumerate_elements(const std::vector<Permutation>& gens,
                                            std::uint64_t limit) {
    if (gens.empty()) return {};
    int deg = gens.front().degree();
    std::set<std::vector<int>> seen;
    std::deque<Permutation> queue;
    std::vector<Permutation> out;
    Permutation id = Permutation::identity(deg);
    seen.insert(id.images());
    queue.push_back(id);
    out.push_back(id);
    while (!queue.empty()) {
        Permutation cur = queue.front();
        queue.pop_front();
        for (const Permutation& g : gens) {
            Permutation nxt = cur.then(g);
            if (seen.insert(nxt.images()).second) {
                if (out.size() >= limit)
                    throw std::runtime_error("enumerate_elements: more than limit elements");
                out.push_back(nxt);
                queue.push_back(nxt);
            }
        }
    }
    return out;
}

}  // namespace cpm
