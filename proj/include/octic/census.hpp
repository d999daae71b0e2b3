#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octic/binary_forms.hpp"
#include "octic/construction.hpp"
#include "octic/enumeration.hpp"
#include "octic/graphs.hpp"
#include "octic/kummer.hpp"

namespace octic {

/// Everything the census needs that depends only on the Golay code.
struct CensusContext {
    GolayCode code;
    KummerStructure ks;
    PermGroup gamma;
    ExtLattice lambda;
    LambdaDiscriminant ld;
};
CensusContext make_census_context();

/// Rank-r lattice with signature (1, r-1) embeds primitively into the K3
/// lattice: an even lattice of signature (2, 20-r) with the opposite
/// discriminant form exists. Rank 20 goes through binary forms.
bool is_geometric(const EvenLattice& lattice, std::string* reason = nullptr);

/// Λ̃ ∩ (N ⊗ Q) = Λ̃: no vector of N outside Λ̃ lies in the span of e_i, h.
bool lambda_primitive(const ExtLattice& n);

/// Overlattices of n (trivial one included) in which Λ̃ stays primitive and
/// that are admissible and geometric.
std::vector<ExtLattice> finite_index_geometric_extensions(const ExtLattice& n, std::size_t* tried = nullptr);

/// The five cluster types Θ1..Θ5 (index 1..5).
std::string theta_name(int type);

struct Cluster {
    int type = 0;
    std::size_t lines = 0;
    std::size_t conics = 0;
    ClusterSignature signature;
};

struct GeneratorSpec {
    Pattern pattern;
    std::vector<i64> pairings;  ///< with the earlier generators
};

struct StratumRecord {
    int codim = 0;
    int parent = -1;  ///< index of the base record one codimension lower
    std::vector<GeneratorSpec> generators;
    ExtLattice ext;
    i64 glue_index = 1;  ///< [N : Λ̃ + Σ Z u_j]
    EvenLattice lattice;
    FanoGraph graph;

    std::vector<Cluster> clusters;      ///< sorted by type
    std::vector<std::string> patterns;  ///< distinct patterns of the vertices outside Λ̃
    std::size_t lines = 0;
    std::size_t reducible_conics = 0;
    std::size_t irreducible_conics = 0;
    unsigned __int128 aut_order = 1;
    std::size_t i_delta = 1;
    std::uint64_t oh_order = 0;
    std::size_t oh_index = 0;  ///< [Aut graph : O_h(N)]
    i64 det = 0;
    i64 fano_index = 0;
    std::uint64_t discr_kernel_order = 0;
    std::vector<BinaryForm> transcendental;  ///< rank 20 only

    std::string cert_abstract;
    std::string cert_delta;

    std::string cluster_label() const;  ///< "Θ1,Θ1,Θ5"
};

/// A generator of one of the five cluster types, one per ≈-class of supp1.
struct GeneratorClass {
    int type = 0;
    Pattern pattern;
    SubsetMask key;  ///< class_key of supp1
};

/// Counters reported by the sweeps.
struct CensusStats {
    std::size_t patterns_tried = 0;
    std::size_t extensions_built = 0;
    std::size_t distinct_candidates = 0;
    std::size_t overlattices_tried = 0;
    std::size_t geometric_lattices = 0;
    std::size_t spanned_lattices = 0;
};

/// Sweep of all one-vector extensions of Λ̃ surviving the Sylvester and
/// parity filters, over Γ-orbits of supports.
std::vector<StratumRecord> codim1_census(const CensusContext& ctx, CensusStats* stats = nullptr);

/// Classes of q = 0 generators whose one-vector extension is geometric,
/// for the patterns l4-0, l6-0, c4-0, c6-0, c8-0.
std::vector<GeneratorClass> generator_classes(const CensusContext& ctx);

/// All geometric N ⊋ base of corank one more, with N ⊗ Q spanned by
/// lines and conics, up to (graph, δ). The new generator runs over the
/// given classes and over every pairing vector passing the Hodge test.
std::vector<StratumRecord> extension_census(const CensusContext& ctx, const std::vector<StratumRecord>& bases,
                                            const std::vector<GeneratorClass>& classes, CensusStats* stats = nullptr);

std::vector<StratumRecord> codim2_census(const CensusContext& ctx, const std::vector<StratumRecord>& codim1,
                                         CensusStats* stats = nullptr);
std::vector<StratumRecord> codim3_census(const CensusContext& ctx, const std::vector<StratumRecord>& codim2,
                                         CensusStats* stats = nullptr);

/// Pairs of generators (u, v) of Λ̃⟨u, v⟩ up to Γ: triples (cl u, cl v, u·v)
/// such that some members of the two classes pass the Hodge test with this
/// product. u·v runs over 0 only when `disjoint_only`, otherwise over the
/// range allowed for lines and irreducible conics ({0,1}, or {0,1,2} for
/// two conics).
struct PairOrbit {
    GeneratorClass u;
    GeneratorClass v;
    i64 product = 0;
    /// Products of the components orthogonal to Λ̃ realised by members,
    /// each with a witness pair of patterns.
    std::vector<mpq_class> orthogonal_products;
    std::vector<std::pair<Pattern, Pattern>> witnesses;
    /// Some witness admits a geometric finite index extension.
    bool geometric = false;
    /// ExtLattices of the geometric extensions, over all witnesses.
    std::vector<ExtLattice> lattices;
};
std::vector<PairOrbit> pair_orbits(const CensusContext& ctx, const std::vector<GeneratorClass>& classes,
                                   bool disjoint_only);

/// Fills the invariants of a record from ext (lattice, graph, groups).
StratumRecord make_record(const CensusContext& ctx, const ExtLattice& ext, int codim,
                          std::vector<GeneratorSpec> generators, bool full_invariants = true);

/// Max lines / reducible conics and the conditional statements over the
/// whole record set.
struct BoundsReport {
    std::size_t max_lines = 0;
    std::size_t max_reducible = 0;
    std::size_t max_conics = 0;
    bool many_conics_rank20 = true;     ///< |Fn2| > 128 implies rank 20
    bool many_conics_no_lines = true;   ///< |Fn2| > 128 implies no lines
    bool many_irreducible_no_lines = true;  ///< |Fn2 irr| > 104 implies no lines
};
BoundsReport bounds_report(const std::vector<const StratumRecord*>& records);

std::string u128_string(unsigned __int128 x);

}  // namespace octic
