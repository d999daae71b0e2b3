#pragma once

#include <string>
#include <vector>

#include "octic/binary_forms.hpp"
#include "octic/census.hpp"

namespace octic {

/// An involution of the graph together with a det -1 involution of T whose
/// sum extends to the K3 lattice for the gluing φ.
struct RealStructureCandidate {
    Perm c_graph;
    IMat c_t;
    BinaryForm t;
    std::size_t gluing = 0;         ///< index into the anti-isometries discr N -> discr T
    std::size_t fixed_vertices = 0;  ///< real lines and conics
    std::size_t fixed_lines = 0;     ///< real lines
    std::string cycle_type;          ///< "1^a 2^b" on the vertices
};

struct RealConicReport {
    std::size_t involutions = 0;   ///< involutions of O_h(N), identity included
    std::size_t gluings = 0;       ///< anti-isometries, summed over the forms T
    std::size_t candidates = 0;    ///< pairs (c_graph, φ) admitting some c_T
    std::size_t max_real = 0;      ///< max fixed conic vertices; 0 if no candidate
    /// One witness per cycle type attaining the maximum.
    std::vector<RealStructureCandidate> maximizers;
    /// Max fixed conics for every involution that occurs in some candidate.
    std::vector<std::pair<Perm, std::size_t>> per_involution;
};

/// Sweep over every involution of O_h(N) and every c_T in O(T) \ O+(T),
/// for every form T in the genus and every gluing. Rank-20 records only.
RealConicReport real_conic_count(const StratumRecord& record);

/// Genus-level check that the transcendental lattice of a rank-19 record
/// is U(2) ⊕ [40]: signature (2,1) and discr T ≅ -discr N.
bool u2_plus_40_genus(const StratumRecord& record, std::string* detail = nullptr);

/// Bounded search over the genus of T for a rank-19 record: every even Gram
/// matrix with entries in [-gram_radius, gram_radius], signature (2,1) and
/// discriminant form -discr N is tested for a basis e, f, z with
/// e² = f² = 0, e·f = 2, z ⟂ e, f, z² = 40, e and f taken with coordinates
/// in [-basis_radius, basis_radius].
struct DecompositionSearch {
    int gram_radius = 0;
    int basis_radius = 0;
    std::size_t grams_scanned = 0;
    std::size_t grams_in_genus = 0;
    std::size_t decomposed = 0;
    bool ok() const { return grams_in_genus > 0 && decomposed == grams_in_genus; }
};
DecompositionSearch u2_plus_40_search(const StratumRecord& record, int gram_radius = 6, int basis_radius = 3);

}  // namespace octic
