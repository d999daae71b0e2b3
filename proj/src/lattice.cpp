#include "octic/lattice.hpp"

#include <stdexcept>

namespace octic {

void EvenLattice::validate() const {
    const std::size_t n = gram.rows();
    if (gram.cols() != n) throw std::invalid_argument("Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram(i, i) % 2 != 0) throw std::invalid_argument("Gram matrix has an odd diagonal entry");
        for (std::size_t j = 0; j < i; ++j)
            if (gram(i, j) != gram(j, i)) throw std::invalid_argument("Gram matrix is not symmetric");
    }
    if (h && h->size() != n) throw std::invalid_argument("polarization has the wrong length");
    for (const auto& e : delta)
        if (e.size() != n) throw std::invalid_argument("Kummer vector has the wrong length");
    if (h && !delta.empty()) {
        if (norm(*h) != 8) throw std::invalid_argument("polarization must have square 8");
        for (const auto& e : delta)
            if (dot(*h, e) != 2) throw std::invalid_argument("Kummer vectors must have degree 2");
    }
}

mpz_class EvenLattice::det() const { return determinant(to_zmat(gram)); }

Signature EvenLattice::signature() const { return octic::signature(gram); }

EvenLattice make_lattice(const IMat& gram) {
    EvenLattice l;
    l.gram = gram;
    l.validate();
    return l;
}

EvenLattice orthogonal_complement(const EvenLattice& lat, const std::vector<IVec>& vectors, IMat* basis) {
    const std::size_t n = lat.rank();
    // x is orthogonal to v iff (G v) . x = 0; collect the functionals as columns.
    ZMat m(n, vectors.size());
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        IVec gv = mul(vectors[k], lat.gram);
        for (std::size_t i = 0; i < n; ++i) m(i, k) = static_cast<long>(gv[i]);
    }
    ZMat ker = left_kernel(m);
    IMat b = to_imat(ker);
    EvenLattice out;
    out.gram = b * lat.gram * b.transposed();
    if (determinant(to_zmat(out.gram)) == 0) throw std::invalid_argument("orthogonal complement is degenerate");
    if (basis) *basis = b;
    return out;
}

SpannedLattice span_lattice(const QMat& rows, const IMat& ambient_gram) {
    SpannedLattice s;
    s.basis = hnf_rows(rows);
    QMat g = s.basis * to_qmat(ambient_gram) * s.basis.transposed();
    if (!is_integral(g)) throw std::invalid_argument("spanned lattice is not integral");
    s.gram = to_imat(g);
    for (std::size_t i = 0; i < s.gram.rows(); ++i)
        if (s.gram(i, i) % 2 != 0) throw std::invalid_argument("spanned lattice is not even");
    return s;
}

QVec coordinates_in(const QMat& basis, const QVec& v) {
    // basis is r x n with r <= n; solve c * basis = v by elimination on the transpose.
    const std::size_t r = basis.rows(), n = basis.cols();
    QMat aug(n, r + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug(i, j) = basis(j, i);
        aug(i, r) = v[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(r, n);
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t p = row;
        while (p < n && aug(p, col) == 0) ++p;
        if (p == n) throw std::invalid_argument("coordinates_in: basis rows are dependent");
        aug.swap_rows(row, p);
        mpq_class piv = aug(row, col);
        for (std::size_t j = col; j <= r; ++j) aug(row, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug(i, col) == 0) continue;
            mpq_class f = aug(i, col);
            for (std::size_t j = col; j <= r; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivot_row[col] = row++;
    }
    for (std::size_t i = row; i < n; ++i)
        if (aug(i, r) != 0) throw std::invalid_argument("coordinates_in: vector not in the span");
    QVec c(r);
    for (std::size_t j = 0; j < r; ++j) c[j] = aug(pivot_row[j], r);
    return c;
}

}  // namespace octic
