#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octic/discriminant.hpp"
#include "octic/enumeration.hpp"
#include "octic/lattice.hpp"
#include "octic/perm.hpp"

namespace octic {

/// Vertex-colored graph with integer edge labels (0 = no edge).
struct ColoredGraph {
    std::vector<int> color;
    IMat edge;
    std::size_t size() const { return color.size(); }
};

/// Vertex colors: degree, plus a Kummer flag when `mark_delta`.
ColoredGraph to_colored(const FanoGraph& g, bool mark_delta);
ColoredGraph relabeled(const ColoredGraph& g, const Perm& p);  ///< vertex i becomes p[i]

struct Canonical {
    std::string certificate;  ///< equal iff the graphs are isomorphic
    Perm labeling;            ///< vertex -> canonical position
    std::vector<Perm> generators;  ///< automorphism group generators
    unsigned __int128 order = 1;   ///< from the orbit structure of the search tree
    std::size_t nodes = 0;         ///< search tree nodes visited
};

/// Individualization-refinement with automorphism and invariant pruning.
Canonical canonical_form(const ColoredGraph& g);
Canonical canonical_form(const FanoGraph& g, bool mark_delta);

/// An isomorphism a -> b (image of each vertex of a), if any.
std::optional<Perm> isomorphism(const ColoredGraph& a, const ColoredGraph& b);
bool is_automorphism(const ColoredGraph& g, const Perm& p);

/// Orbit of a vertex set under a permutation group (sets as sorted lists).
std::size_t set_orbit_length(const std::vector<int>& set, const std::vector<Perm>& gens, std::size_t limit = 10000000);

/// i_δ = [G : stab δ] for G = Aut(graph).
std::size_t delta_index(const FanoGraph& g, const Canonical& aut);

/// Lattice spanned by h and the graph vertices, with the Gram matrix read
/// off the graph (h² = 8), modulo the kernel of the form.
EvenLattice fano_lattice(const FanoGraph& g);
/// Index of the sublattice spanned by h and the vertices in the host.
/// Zero if the vertices and h do not span the host rationally.
i64 fano_index(const EvenLattice& host, const FanoGraph& g);

/// Action of graph automorphisms on a host lattice spanned rationally by
/// the vertices and h.
class GraphAction {
public:
    GraphAction(const EvenLattice& host, const FanoGraph& g);
    /// Rational matrix M with v_i M = v_{p(i)} (row vectors, host basis).
    QMat matrix(const Perm& p) const;
    /// True if p induces an isometry of the host (integral matrix).
    bool preserves_host(const Perm& p) const;
    /// Induced automorphism of discr host (images of the form's generators).
    FormMap discriminant_action(const Perm& p) const;
    const DiscriminantForm& discriminant() const { return discr_; }
    bool spans() const { return spans_; }

private:
    EvenLattice host_;
    std::vector<IVec> vectors_;  // vertices then h
    std::vector<std::size_t> pivots_;
    QMat basis_inv_;
    DiscriminantForm discr_;
    bool spans_ = false;
};

/// O_h(N) as the stabilizer of N in Aut(graph), via orbit-stabilizer over
/// the images of N.
struct PolarizedGroup {
    std::vector<Perm> generators;
    std::uint64_t order = 0;
    std::size_t lattice_orbit = 0;  ///< [Aut(graph) : O_h(N)]
};
PolarizedGroup polarized_group(const EvenLattice& host, const FanoGraph& g, const Canonical& aut);

/// Order of the image of a permutation group in Aut(discr N).
std::uint64_t discriminant_image_order(const GraphAction& action, const std::vector<Perm>& gens);
/// |ker(O_h(N) -> Aut(discr N))|.
std::uint64_t discr_kernel_order(const EvenLattice& host, const FanoGraph& g, const PolarizedGroup& oh);

/// g extends to the overlattice given by the glue K iff g(K) = K.
bool extends_to_overlattice(const DiscriminantForm& d, const FormMap& g, const Subgroup& k);
/// φ ∘ g_N = g_T ∘ φ; throws if φ is not an anti-isometry discr N -> discr T.
bool glue_extends_to_L(const DiscriminantForm& dn, const DiscriminantForm& dt, const FormMap& g_n, const FormMap& g_t,
                       const FormMap& phi);

/// Plain-text DOT rendering.
std::string to_dot(const FanoGraph& g);

}  // namespace octic
