#pragma once

#include <cstdint>
#include <vector>

namespace octic {

/// Permutation of {0, ..., n-1}: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(std::size_t n);
/// Apply a, then b.
Perm perm_then(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool perm_is_identity(const Perm& a);

/// Stabilizer chain built by the deterministic Schreier–Sims algorithm.
class SchreierSims {
public:
    explicit SchreierSims(std::size_t degree);
    SchreierSims(std::size_t degree, const std::vector<Perm>& generators);

    /// Adds g to the group (no-op if already a member).
    void add(const Perm& g);
    bool contains(const Perm& g) const;
    /// Group order (fits in 128 bits for every group used here).
    unsigned __int128 order() const;
    std::uint64_t order64() const;
    std::size_t degree() const { return n_; }
    const std::vector<Perm>& generators() const { return gens_; }
    /// Every group element; throws std::length_error above `limit`.
    std::vector<Perm> elements(std::size_t limit = 50000000) const;

private:
    struct Level {
        int base = 0;
        std::vector<Perm> gens;
        std::vector<int> orbit;
        std::vector<Perm> transversal;           // indexed by point; empty if not in orbit
        std::vector<std::vector<char>> checked;  // Schreier pair (orbit position, generator) sifted
    };
    std::size_t n_;
    std::vector<Level> levels_;
    std::vector<Perm> gens_;

    void insert(std::size_t level, const Perm& h);
    void complete();
    void grow_orbit(Level& lv) const;
    // Returns the level at which g leaves the chain (levels_.size() if it
    // sifts through) and leaves the residue in g.
    std::size_t sift(Perm& g, std::size_t from) const;
};

/// Orbits of the group generated by `gens` on {0..n-1}: orbit id per point.
std::vector<int> orbit_ids(std::size_t n, const std::vector<Perm>& gens);

}  // namespace octic
