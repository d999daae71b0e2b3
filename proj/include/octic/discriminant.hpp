#pragma once

#include <cstddef>
#include <vector>

#include "octic/lattice.hpp"

namespace octic {

/// Finite quadratic form: the group ⊕ Z/d_i with Q/2Z-valued q and
/// Q/Z-valued b. Values are stored as numerators over the exponent e:
/// q in Z/2e, b in Z/e. Elements are residue vectors.
struct DiscriminantForm {
    std::vector<i64> orders;  ///< invariant factors (all > 1)
    i64 exponent = 1;
    std::vector<i64> q;       ///< q(g_i) * e mod 2e
    IMat b;                   ///< b(g_i, g_j) * e mod e

    // Present when the form comes from a lattice.
    QMat lifts;    ///< row i: dual vector lifting g_i, in lattice coordinates
    IMat reducer;  ///< a = reducer * (Gram x) mod d for a dual vector x

    std::size_t size() const;
    std::size_t length() const { return orders.size(); }
    bool trivial() const { return orders.empty(); }

    IVec zero() const { return IVec(orders.size(), 0); }
    IVec element(std::size_t index) const;
    std::size_t index(const IVec& a) const;
    IVec reduce(IVec a) const;
    IVec add(const IVec& a, const IVec& b) const;
    IVec scale(const IVec& a, i64 k) const;
    i64 order_of(const IVec& a) const;

    i64 qv(const IVec& a) const;                  ///< q(a) * e mod 2e
    i64 bv(const IVec& a, const IVec& c) const;   ///< b(a, c) * e mod e
    mpq_class q_value(const IVec& a) const;       ///< in [0, 2)
    mpq_class b_value(const IVec& a, const IVec& c) const;  ///< in [0, 1)

    /// Residues of a dual vector given in lattice coordinates.
    IVec from_dual(const QVec& x, const IMat& gram) const;
    /// A dual vector (lattice coordinates) representing a.
    QVec lift(const IVec& a) const;

    DiscriminantForm negated() const;
    std::vector<i64> primes() const;
    /// p-primary part; `embedding` receives the parent residues of its generators.
    DiscriminantForm p_part(i64 p, std::vector<IVec>* embedding = nullptr) const;
    bool is_isotropic(const IVec& a) const { return qv(a) == 0; }
};

DiscriminantForm discriminant_form(const IMat& gram);
inline DiscriminantForm discriminant_form(const EvenLattice& l) { return discriminant_form(l.gram); }

/// Abstract form from orders and values (numerators over the exponent).
DiscriminantForm make_form(const std::vector<i64>& orders, const std::vector<i64>& q, const IMat& b);

/// Form on the subgroup spanned by `basis` (elements of `parent`, assumed to
/// be a direct-sum basis with the given orders).
DiscriminantForm restrict_form(const DiscriminantForm& parent, const std::vector<IVec>& basis,
                               const std::vector<i64>& orders);

/// Isometry: images of the generators of the source.
using FormMap = std::vector<IVec>;

/// Isometries A -> B; stops after `limit` results when limit > 0.
std::vector<FormMap> isometries(const DiscriminantForm& a, const DiscriminantForm& b, std::size_t limit = 0);
bool is_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b);
IVec apply_map(const DiscriminantForm& src, const DiscriminantForm& dst, const FormMap& f, const IVec& a);

/// Signature mod 8 from the Gauss sum; throws if the sum does not have the
/// expected modulus sqrt|A| (pinned tolerance 1e-6 relative).
int gauss_signature(const DiscriminantForm& d);

/// Subgroup stored as its sorted element indices plus generators.
struct Subgroup {
    std::vector<std::size_t> elements;
    std::vector<IVec> generators;
    std::size_t size() const { return elements.size(); }
};

Subgroup subgroup_generated(const DiscriminantForm& d, const std::vector<IVec>& gens);
/// All isotropic subgroups (including the trivial one).
std::vector<Subgroup> isotropic_subgroups(const DiscriminantForm& d);
/// Elements orthogonal to a subgroup.
std::vector<std::size_t> orthogonal_elements(const DiscriminantForm& d, const Subgroup& k);

/// Even overlattice of `gram` glued along an isotropic subgroup; returns the
/// new basis (rational rows in the old coordinates) and its Gram matrix.
/// Throws std::invalid_argument if k is not isotropic.
SpannedLattice overlattice(const IMat& gram, const DiscriminantForm& d, const Subgroup& k);

/// Sorted multiset of (order, q-numerator over `scale`) over K⊥/K cosets;
/// an isomorphism invariant used to cross-check overlattices.
std::vector<std::pair<i64, mpq_class>> coset_value_profile(const DiscriminantForm& d, const Subgroup& k);
std::vector<std::pair<i64, mpq_class>> value_profile(const DiscriminantForm& d);

}  // namespace octic
