#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octic/linalg.hpp"
#include "octic/matrix.hpp"

namespace octic {

/// Even integral lattice given by its Gram matrix, optionally polarized by a
/// vector h and carrying a distinguished family of Kummer vectors; all
/// vectors are coordinate rows in the Gram basis.
struct EvenLattice {
    IMat gram;
    std::optional<IVec> h;
    std::vector<IVec> delta;

    std::size_t rank() const { return gram.rows(); }
    /// Throws std::invalid_argument on a non-symmetric or odd Gram matrix or
    /// on inconsistent polarization data.
    void validate() const;
    mpz_class det() const;
    Signature signature() const;
    i64 dot(const IVec& a, const IVec& b) const { return bilinear(a, gram, b); }
    i64 norm(const IVec& a) const { return bilinear(a, gram, a); }
};

/// Even lattice with Gram matrix `gram`; checks evenness.
EvenLattice make_lattice(const IMat& gram);

/// Orthogonal complement of the span of `vectors` (rows of coordinates);
/// the result's basis is returned in `basis` (rows, coordinates in `lat`).
EvenLattice orthogonal_complement(const EvenLattice& lat, const std::vector<IVec>& vectors, IMat* basis = nullptr);

/// Lattice spanned by rational rows over a lattice with integral Gram
/// matrix `ambient_gram` (e.g. generators that are not a basis); returns a
/// basis in HNF and the induced Gram matrix. Throws if the span is not
/// integral or not even.
struct SpannedLattice {
    QMat basis;  ///< rows, coordinates in the ambient generators
    IMat gram;
};
SpannedLattice span_lattice(const QMat& rows, const IMat& ambient_gram);

/// Coordinates of an ambient vector `v` in a basis `basis` (solves c * basis = v).
QVec coordinates_in(const QMat& basis, const QVec& v);

}  // namespace octic
