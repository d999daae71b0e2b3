#pragma once

#include <optional>
#include <utility>

#include "octic/matrix.hpp"

namespace octic {

/// Hermite normal form of the row lattice of `a`. Zero rows are dropped; the
/// result is in echelon form with positive pivots and reduced entries above
/// every pivot, so it is a canonical basis of the row module.
ZMat hnf_rows(const ZMat& a);

/// Same as hnf_rows, but also returns U with U * a = [H; 0].
std::pair<ZMat, ZMat> hnf_rows_with_transform(const ZMat& a);

/// Canonical basis of the Z-module spanned by rational rows.
QMat hnf_rows(const QMat& a);

/// Basis of the left integer kernel {x in Z^m : x a = 0}.
ZMat left_kernel(const ZMat& a);

struct SmithForm {
    ZVec diagonal;  ///< invariant factors d_1 | d_2 | ... (length min(rows, cols))
    ZMat left;      ///< P, unimodular
    ZMat right;     ///< Q, unimodular; P * A * Q = diag
};

SmithForm smith_form(const ZMat& a);

mpz_class determinant(const ZMat& a);
mpq_class determinant(const QMat& a);
std::size_t rank(const QMat& a);

/// Inverse of a square rational matrix; throws if singular.
QMat inverse(const QMat& a);

/// Solve x * a = b for a row vector x (a square, nonsingular).
QVec solve_left(const QMat& a, const QVec& b);

/// Sylvester signature (positive, negative, zero) of a symmetric matrix.
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool operator==(const Signature&) const = default;
};
Signature signature(const QMat& sym);
Signature signature(const IMat& sym);

/// LLL reduction of a positive definite integer Gram matrix.
/// Returns unimodular T such that T * g * T^T is LLL-reduced.
IMat lll_gram(const IMat& g, double delta = 0.99);

/// True if every entry is an integer.
bool is_integral(const QMat& m);
bool is_integral(const QVec& v);

}  // namespace octic
