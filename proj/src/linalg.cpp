#include "octic/linalg.hpp"

#include <cmath>
#include <numeric>

namespace octic {

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Row operation helpers on a pair of matrices kept in lock step.
void row_axpy(ZMat& m, std::size_t dst, std::size_t src, const mpz_class& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(src, c) != 0) m(dst, c) += f * m(src, c);
}

void row_neg(ZMat& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

void col_axpy(ZMat& m, std::size_t dst, std::size_t src, const mpz_class& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, src) != 0) m(r, dst) += f * m(r, src);
}

// In-place echelonization; returns number of pivot rows. Transform rows of u
// follow every operation applied to a when u is non-null.
std::size_t echelonize(ZMat& a, ZMat* u) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t prow = 0;
    std::vector<std::size_t> pivcols;
    for (std::size_t col = 0; col < n && prow < m; ++col) {
        // Euclid on the column below prow.
        while (true) {
            std::size_t best = m;
            for (std::size_t r = prow; r < m; ++r)
                if (a(r, col) != 0 && (best == m || abs(a(r, col)) < abs(a(best, col)))) best = r;
            if (best == m) break;
            a.swap_rows(prow, best);
            if (u) u->swap_rows(prow, best);
            bool done = true;
            for (std::size_t r = prow + 1; r < m; ++r) {
                if (a(r, col) == 0) continue;
                mpz_class q = floor_div(a(r, col), a(prow, col));
                row_axpy(a, r, prow, -q);
                if (u) row_axpy(*u, r, prow, -q);
                if (a(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (a(prow, col) == 0) continue;
        if (a(prow, col) < 0) {
            row_neg(a, prow);
            if (u) row_neg(*u, prow);
        }
        for (std::size_t r = 0; r < prow; ++r) {
            mpz_class q = floor_div(a(r, col), a(prow, col));
            row_axpy(a, r, prow, -q);
            if (u) row_axpy(*u, r, prow, -q);
        }
        pivcols.push_back(col);
        ++prow;
    }
    return prow;
}

}  // namespace

ZMat hnf_rows(const ZMat& a) {
    ZMat w = a;
    std::size_t r = echelonize(w, nullptr);
    ZMat h(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) h(i, j) = w(i, j);
    return h;
}

std::pair<ZMat, ZMat> hnf_rows_with_transform(const ZMat& a) {
    ZMat w = a;
    ZMat u = ZMat::identity(a.rows());
    std::size_t r = echelonize(w, &u);
    ZMat h(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) h(i, j) = w(i, j);
    return {h, u};
}

QMat hnf_rows(const QMat& a) {
    mpz_class den = 1;
    for (const auto& x : a.data()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    ZMat z(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpq_class v = a(i, j) * den;
            z(i, j) = v.get_num();
        }
    ZMat h = hnf_rows(z);
    QMat q(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) {
            q(i, j) = mpq_class(h(i, j), den);
            q(i, j).canonicalize();
        }
    return q;
}

ZMat left_kernel(const ZMat& a) {
    ZMat w = a;
    ZMat u = ZMat::identity(a.rows());
    std::size_t r = echelonize(w, &u);
    ZMat k(a.rows() - r, a.rows());
    for (std::size_t i = r; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) k(i - r, j) = u(i, j);
    return hnf_rows(k);
}

SmithForm smith_form(const ZMat& a0) {
    ZMat a = a0;
    const std::size_t m = a.rows(), n = a.cols();
    ZMat p = ZMat::identity(m), q = ZMat::identity(n);
    const std::size_t k_max = std::min(m, n);
    for (std::size_t k = 0; k < k_max; ++k) {
        while (true) {
            // smallest nonzero entry of the lower-right block
            std::size_t br = m, bc = n;
            for (std::size_t i = k; i < m; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (a(i, j) != 0 && (br == m || abs(a(i, j)) < abs(a(br, bc)))) {
                        br = i;
                        bc = j;
                    }
            if (br == m) break;  // remaining block is zero
            a.swap_rows(k, br);
            p.swap_rows(k, br);
            a.swap_cols(k, bc);
            q.swap_cols(k, bc);
            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (a(i, k) == 0) continue;
                mpz_class f = floor_div(a(i, k), a(k, k));
                row_axpy(a, i, k, -f);
                row_axpy(p, i, k, -f);
                if (a(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a(k, j) == 0) continue;
                mpz_class f = floor_div(a(k, j), a(k, k));
                col_axpy(a, j, k, -f);
                col_axpy(q, j, k, -f);
                if (a(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block by the pivot
            bool divides = true;
            for (std::size_t i = k + 1; i < m && divides; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (a(i, j) % a(k, k) != 0) {
                        row_axpy(a, k, i, 1);
                        row_axpy(p, k, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(k, k) < 0) {
            row_neg(a, k);
            row_neg(p, k);
        }
    }
    SmithForm s;
    s.diagonal.resize(k_max);
    for (std::size_t k = 0; k < k_max; ++k) s.diagonal[k] = a(k, k);
    s.left = std::move(p);
    s.right = std::move(q);
    return s;
}

mpz_class determinant(const ZMat& a0) {
    if (a0.rows() != a0.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = a0.rows();
    if (n == 0) return 1;
    ZMat a = a0;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

mpq_class determinant(const QMat& a0) {
    if (a0.rows() != a0.cols()) throw std::invalid_argument("determinant: not square");
    QMat a = a0;
    const std::size_t n = a.rows();
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a(r, k) == 0) ++r;
        if (r == n) return 0;
        if (r != k) {
            a.swap_rows(k, r);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            mpq_class f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

std::size_t rank(const QMat& a0) {
    QMat a = a0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            mpq_class f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

QMat inverse(const QMat& a0) {
    if (a0.rows() != a0.cols()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = a0.rows();
    QMat a = a0;
    QMat inv = QMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a(r, k) == 0) ++r;
        if (r == n) throw std::domain_error("inverse: singular matrix");
        a.swap_rows(k, r);
        inv.swap_rows(k, r);
        mpq_class piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            mpq_class f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                if (a(k, j) != 0) a(i, j) -= f * a(k, j);
                if (inv(k, j) != 0) inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

QVec solve_left(const QMat& a, const QVec& b) {
    // x a = b  <=>  a^T x^T = b^T
    QMat at = a.transposed();
    const std::size_t n = at.rows();
    if (b.size() != n) throw std::invalid_argument("solve_left: shape mismatch");
    QMat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = at(i, j);
        aug(i, n) = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && aug(r, k) == 0) ++r;
        if (r == n) throw std::domain_error("solve_left: singular matrix");
        aug.swap_rows(k, r);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || aug(i, k) == 0) continue;
            mpq_class f = aug(i, k) / aug(k, k);
            for (std::size_t j = k; j <= n; ++j) aug(i, j) -= f * aug(k, j);
        }
    }
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n) / aug(i, i);
    return x;
}

Signature signature(const QMat& sym) {
    QMat a = sym;
    const std::size_t n = a.rows();
    Signature s;
    std::size_t k = 0;
    std::vector<bool> done(n, false);
    // Congruence diagonalization (Sylvester's law of inertia).
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            // all remaining diagonal entries vanish: combine two rows if possible
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
            for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
            piv = pi;
        }
        mpq_class d = a(piv, piv);
        if (d > 0) ++s.positive;
        else ++s.negative;
        done[piv] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a(i, piv) == 0) continue;
            mpq_class f = a(i, piv) / d;
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(piv, j);
            for (std::size_t j = 0; j < n; ++j) a(j, i) = (j == i) ? a(i, i) : a(i, j);
        }
        ++k;
    }
    s.zero = static_cast<int>(n) - s.positive - s.negative;
    return s;
}

Signature signature(const IMat& sym) { return signature(to_qmat(sym)); }

bool is_integral(const QMat& m) {
    for (const auto& x : m.data())
        if (x.get_den() != 1) return false;
    return true;
}

bool is_integral(const QVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

IMat lll_gram(const IMat& g0, double delta) {
    const std::size_t n = g0.rows();
    IMat g = g0;
    IMat t = IMat::identity(n);
    if (n <= 1) return t;
    std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
    std::vector<double> b(n, 0.0);
    auto gso = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                double s = static_cast<double>(g(i, j));
                for (std::size_t l = 0; l < j; ++l) s -= mu[j][l] * mu[i][l] * b[l];
                mu[i][j] = s / b[j];
            }
            double s = static_cast<double>(g(i, i));
            for (std::size_t l = 0; l < i; ++l) s -= mu[i][l] * mu[i][l] * b[l];
            b[i] = s;
        }
    };
    auto sub_row = [&](std::size_t k, std::size_t j, i64 r) {
        // b_k -= r b_j
        for (std::size_t c = 0; c < n; ++c) t(k, c) -= r * t(j, c);
        i64 gkj = g(k, j), gjj = g(j, j);
        for (std::size_t c = 0; c < n; ++c) {
            if (c == k) continue;
            g(k, c) -= r * g(j, c);
            g(c, k) = g(k, c);
        }
        g(k, k) = g(k, k) - 2 * r * gkj + r * r * gjj;
        // g(k,j) updated inside loop already (c == j), make symmetric
        g(j, k) = g(k, j);
    };
    gso();
    std::size_t k = 1;
    std::size_t guard = 0;
    while (k < n) {
        if (++guard > 1000000) throw std::runtime_error("lll_gram: no convergence");
        for (std::size_t jj = k; jj-- > 0;) {
            double m = mu[k][jj];
            if (std::fabs(m) > 0.5) {
                i64 r = static_cast<i64>(std::llround(m));
                sub_row(k, jj, r);
                for (std::size_t l = 0; l < jj; ++l) mu[k][l] -= static_cast<double>(r) * mu[jj][l];
                mu[k][jj] -= static_cast<double>(r);
            }
        }
        if (b[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * b[k - 1]) {
            t.swap_rows(k, k - 1);
            g.swap_rows(k, k - 1);
            g.swap_cols(k, k - 1);
            gso();
            k = (k > 1) ? k - 1 : 1;
        } else {
            ++k;
        }
    }
    return t;
}

}  // namespace octic
