#include "octic/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace octic {

namespace {

// Relative slack on the search radius; hits are verified exactly, so the
// only requirement is that rounding never cuts off a genuine solution.
constexpr long double kRadiusSlack = 1e-9L;

using LD = long double;

struct Cholesky {
    std::size_t n = 0;
    std::vector<LD> d;               // pivots
    std::vector<std::vector<LD>> m;  // m[i][j], j > i
};

Cholesky quadratic_completion(const IMat& q) {
    Cholesky ch;
    ch.n = q.rows();
    std::vector<std::vector<LD>> a(ch.n, std::vector<LD>(ch.n));
    for (std::size_t i = 0; i < ch.n; ++i)
        for (std::size_t j = 0; j < ch.n; ++j) a[i][j] = static_cast<LD>(q(i, j));
    for (std::size_t i = 0; i < ch.n; ++i) {
        if (!(a[i][i] > 0)) throw std::invalid_argument("form is not positive definite");
        for (std::size_t j = i + 1; j < ch.n; ++j) {
            a[j][i] = a[i][j];
            a[i][j] /= a[i][i];
        }
        for (std::size_t k = i + 1; k < ch.n; ++k)
            for (std::size_t l = k; l < ch.n; ++l) a[k][l] -= a[k][i] * a[i][l];
    }
    ch.d.resize(ch.n);
    ch.m.assign(ch.n, std::vector<LD>(ch.n, 0));
    for (std::size_t i = 0; i < ch.n; ++i) {
        ch.d[i] = a[i][i];
        for (std::size_t j = i + 1; j < ch.n; ++j) ch.m[i][j] = a[i][j];
    }
    return ch;
}

LD to_ld(const mpq_class& x) {
    return static_cast<LD>(x.get_num().get_d()) / static_cast<LD>(x.get_den().get_d());
}

// Enumerates x in Z^n with Q(x + c) <= bound for an already reduced Q.
bool enumerate_reduced(const IMat& q, const std::vector<LD>& c, LD bound,
                       const std::function<bool(const IVec&)>& visit) {
    const std::size_t n = q.rows();
    if (n == 0) return bound < 0 ? true : visit(IVec{});
    if (bound < 0) return true;
    Cholesky ch = quadratic_completion(q);
    const LD top = bound * (1 + kRadiusSlack) + kRadiusSlack;
    IVec x(n, 0);
    std::vector<LD> y(n, 0);       // y_i = x_i + c_i
    std::vector<LD> rem(n + 1, 0);  // budget left before choosing coordinate i
    std::vector<i64> hi(n, 0);
    rem[n] = top;
    auto center = [&](std::size_t i) {
        LD s = c[i];
        for (std::size_t j = i + 1; j < n; ++j) s += ch.m[i][j] * y[j];
        return -s;
    };
    auto open = [&](std::size_t i) {
        LD r = rem[i + 1];
        if (r < 0) r = 0;
        LD ctr = center(i);
        LD rad = std::sqrt(r / ch.d[i]);
        i64 lo = static_cast<i64>(std::ceil(ctr - rad - kRadiusSlack));
        hi[i] = static_cast<i64>(std::floor(ctr + rad + kRadiusSlack));
        x[i] = lo;
    };
    std::size_t i = n - 1;
    open(i);
    while (true) {
        if (x[i] > hi[i]) {
            if (i == n - 1) return true;
            ++i;
            ++x[i];
            continue;
        }
        y[i] = static_cast<LD>(x[i]) + c[i];
        LD t = y[i];
        for (std::size_t j = i + 1; j < n; ++j) t += ch.m[i][j] * y[j];
        rem[i] = rem[i + 1] - ch.d[i] * t * t;
        if (rem[i] < -kRadiusSlack * (1 + top)) {
            ++x[i];
            continue;
        }
        if (i == 0) {
            if (!visit(x)) return false;
            ++x[0];
            continue;
        }
        --i;
        open(i);
    }
}

struct Reduced {
    IMat t;      // unimodular, q' = t q t^T
    IMat q;
    QMat t_inv;
};

Reduced reduce(const IMat& q) {
    Reduced r;
    r.t = lll_gram(q);
    r.q = r.t * q * r.t.transposed();
    r.t_inv = inverse(to_qmat(r.t));
    return r;
}

void require_negative_definite(const IMat& g) {
    Signature s = signature(g);
    if (s.negative != static_cast<int>(g.rows())) throw std::invalid_argument("lattice is not negative definite");
}

IMat negated(const IMat& g) {
    IMat r = g;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = -r(i, j);
    return r;
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    i64 x1 = 0, y1 = 0;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

bool enumerate_ellipsoid(const IMat& q, const QVec& c, const mpq_class& bound,
                         const std::function<bool(const IVec&)>& visit) {
    const std::size_t n = q.rows();
    if (n == 0) return bound < 0 ? true : visit(IVec{});
    Reduced r = reduce(q);
    // w = x T, w + c = (x + c T^{-1}) T
    QVec cq = c.empty() ? QVec(n, 0) : mul(c, r.t_inv);
    std::vector<LD> cl(n);
    for (std::size_t i = 0; i < n; ++i) cl[i] = to_ld(cq[i]);
    return enumerate_reduced(r.q, cl, to_ld(bound), [&](const IVec& x) { return visit(mul(x, r.t)); });
}

std::vector<IVec> coset_vectors(const CosetQuery& query) {
    const std::size_t n = query.gram.rows();
    require_negative_definite(query.gram);
    QVec shift = query.shift.empty() ? QVec(n, 0) : query.shift;
    if (shift.size() != n) throw std::invalid_argument("shift has the wrong length");
    IMat q = negated(query.gram);
    mpq_class bound = -query.target_norm;
    // exact test: with D the common denominator, (D w + D c) Q (D w + D c) = bound D²
    mpz_class den = 1;
    for (const auto& x : shift) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    const i64 d = to_i64(den);
    IVec dc(n);
    for (std::size_t i = 0; i < n; ++i) dc[i] = to_i64(mpq_class(shift[i] * den));
    mpq_class scaled = bound * den * den;
    std::vector<IVec> out;
    if (scaled.get_den() != 1) return out;
    const __int128 want = static_cast<__int128>(to_i64(scaled));
    enumerate_ellipsoid(q, shift, bound, [&](const IVec& w) {
        IVec z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = d * w[i] + dc[i];
        __int128 s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (z[i] == 0) continue;
            __int128 row = 0;
            for (std::size_t j = 0; j < n; ++j) row += static_cast<__int128>(q(i, j)) * z[j];
            s += row * z[i];
        }
        if (s == want) out.push_back(w);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IVec> short_vectors(const IMat& negative_definite_gram, i64 norm) {
    return coset_vectors(CosetQuery{negative_definite_gram, {}, mpq_class(static_cast<long>(norm))});
}

std::vector<IVec> short_vectors_naive(const IMat& g, i64 norm, i64 radius) {
    require_negative_definite(g);
    const std::size_t n = g.rows();
    std::vector<IVec> out;
    IVec w(n, -radius);
    if (n == 0) return norm == 0 ? std::vector<IVec>{IVec{}} : out;
    while (true) {
        if (bilinear(w, g, w) == norm) out.push_back(w);
        std::size_t k = 0;
        while (k < n && w[k] == radius) w[k++] = -radius;
        if (k == n) break;
        ++w[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

DegreeSlicer::DegreeSlicer(const EvenLattice& lattice) : lat_(lattice) {
    if (!lat_.h) throw std::invalid_argument("lattice has no polarization");
    Signature s = lat_.signature();
    if (s.positive != 1 || s.zero != 0) throw std::invalid_argument("lattice is not hyperbolic");
    const std::size_t n = lat_.rank();
    hg_ = mul(*lat_.h, lat_.gram);
    // extended gcd over the coordinates of the functional
    base_.assign(n, 0);
    i64 g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (hg_[i] == 0) continue;
        if (g == 0) {
            g = std::abs(hg_[i]);
            base_[i] = hg_[i] > 0 ? 1 : -1;
            continue;
        }
        i64 a = 0, b = 0;
        i64 ng = ext_gcd(g, hg_[i], a, b);
        for (auto& x : base_) x *= a;
        base_[i] += b;
        g = ng;
    }
    if (g == 0) throw std::invalid_argument("polarization is zero");
    depth_ = g;
    ZMat col(n, 1);
    for (std::size_t i = 0; i < n; ++i) col(i, 0) = hg_[i];
    IMat k = to_imat(left_kernel(col));
    IMat q = negated(k * lat_.gram * k.transposed());
    if (k.rows() > 0) {
        IMat t = lll_gram(q);
        kernel_ = t * k;
        q_ = t * q * t.transposed();
        q_inv_ = inverse(to_qmat(q_));
    } else {
        kernel_ = IMat(0, n);
        q_ = IMat(0, 0);
    }
}

bool DegreeSlicer::for_each(i64 degree, i64 norm, const std::function<bool(const IVec&)>& visit) const {
    if (degree % depth_ != 0) return true;
    const std::size_t n = lat_.rank();
    const std::size_t m = kernel_.rows();
    IVec v0 = base_;
    for (auto& x : v0) x *= degree / depth_;
    const IMat& g = lat_.gram;
    IVec gv0 = mul(v0, g);
    QVec b(m, 0);
    for (std::size_t i = 0; i < m; ++i) b[i] = mpq_class(static_cast<long>(dot(kernel_.row(i), gv0)));
    QVec c = m ? mul(b, q_inv_) : QVec{};
    mpq_class cqc = 0;
    for (std::size_t i = 0; i < m; ++i) cqc += c[i] * b[i];
    mpq_class bound = mpq_class(static_cast<long>(bilinear(v0, g, v0) - norm)) + cqc;
    std::vector<LD> shift(m);
    for (std::size_t i = 0; i < m; ++i) shift[i] = -to_ld(c[i]);
    return enumerate_reduced(q_, shift, to_ld(bound), [&](const IVec& w) {
        IVec v = v0;
        for (std::size_t i = 0; i < m; ++i) {
            if (w[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] += w[i] * kernel_(i, j);
        }
        if (dot(v, hg_) != degree || bilinear(v, g, v) != norm) return true;
        return visit(v);
    });
}

std::vector<IVec> DegreeSlicer::vectors(i64 degree, i64 norm) const {
    std::vector<IVec> out;
    for_each(degree, norm, [&](const IVec& v) {
        out.push_back(v);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<IVec> DegreeSlicer::find(i64 degree, i64 norm) const {
    std::optional<IVec> hit;
    for_each(degree, norm, [&](const IVec& v) {
        hit = v;
        return false;
    });
    return hit;
}

std::size_t FanoGraph::lines() const {
    return static_cast<std::size_t>(std::count_if(vertices.begin(), vertices.end(),
                                                  [](const FanoVertex& v) { return v.degree == 1; }));
}

std::size_t FanoGraph::conics() const { return vertices.size() - lines(); }

std::optional<std::string> FanoGraph::bound_violation() const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            i64 a = adjacency(i, j);
            int di = vertices[i].degree, dj = vertices[j].degree;
            i64 cap = (di == 2 && dj == 2) ? 2 : 1;
            if (a < 0 || a > cap)
                return "vertices " + std::to_string(i) + " and " + std::to_string(j) + " meet with multiplicity " +
                       std::to_string(a);
        }
    return std::nullopt;
}

FanoGraph fano_graph(const EvenLattice& lattice) { return fano_graph(lattice, DegreeSlicer(lattice)); }

FanoGraph fano_graph(const EvenLattice& lattice, const DegreeSlicer& slicer) {
    FanoGraph fg;
    auto lines = slicer.vectors(1, -2);
    auto conics = slicer.vectors(2, -2);
    std::vector<IVec> lg;
    lg.reserve(lines.size());
    for (const auto& l : lines) lg.push_back(mul(l, lattice.gram));
    for (const auto& l : lines) fg.vertices.push_back({l, 1, -1});
    for (const auto& c : conics) {
        bool irreducible = std::all_of(lg.begin(), lg.end(), [&](const IVec& l) { return dot(l, c) >= 0; });
        if (irreducible) fg.vertices.push_back({c, 2, -1});
        else ++fg.reducible_conics;
    }
    for (std::size_t k = 0; k < lattice.delta.size(); ++k) {
        auto it = std::find_if(fg.vertices.begin(), fg.vertices.end(),
                               [&](const FanoVertex& v) { return v.coords == lattice.delta[k]; });
        if (it == fg.vertices.end()) continue;
        it->kummer_index = static_cast<int>(k);
        fg.kummer.push_back(static_cast<int>(it - fg.vertices.begin()));
    }
    std::sort(fg.kummer.begin(), fg.kummer.end());
    const std::size_t n = fg.vertices.size();
    fg.adjacency = IMat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        IVec gi = mul(fg.vertices[i].coords, lattice.gram);
        for (std::size_t j = i + 1; j < n; ++j) {
            i64 a = dot(gi, fg.vertices[j].coords);
            fg.adjacency(i, j) = a;
            fg.adjacency(j, i) = a;
        }
    }
    return fg;
}

std::size_t intersecting_line_pairs(const FanoGraph& g) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i].degree != 1) continue;
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            if (g.vertices[j].degree == 1 && g.adjacency(i, j) == 1) ++c;
    }
    return c;
}

std::string to_string(Violation v) {
    switch (v) {
        case Violation::none: return "none";
        case Violation::h_divisible: return "h divisible by 2";
        case Violation::exceptional_divisor: return "exceptional divisor";
        case Violation::isotropic2: return "2-isotropic vector";
        case Violation::missing_conic: return "missing conic";
    }
    return "?";
}

AdmissibilityVerdict admissible(const EvenLattice& lattice) { return admissible(lattice, DegreeSlicer(lattice)); }

AdmissibilityVerdict admissible(const EvenLattice& lattice, const DegreeSlicer& slicer) {
    AdmissibilityVerdict v;
    const IVec& h = *lattice.h;
    if (std::all_of(h.begin(), h.end(), [](i64 x) { return x % 2 == 0; })) {
        v.violation = Violation::h_divisible;
        v.witness = h;
        for (auto& x : v.witness) x /= 2;
        return v;
    }
    if (auto r = slicer.find(0, -2)) {
        v.violation = Violation::exceptional_divisor;
        v.witness = *r;
        return v;
    }
    if (auto r = slicer.find(2, 0)) {
        v.violation = Violation::isotropic2;
        v.witness = *r;
        return v;
    }
    std::vector<IVec> dg;
    for (const auto& e : lattice.delta) dg.push_back(mul(e, lattice.gram));
    slicer.for_each(1, -2, [&](const IVec& l) {
        for (const auto& e : dg)
            if (dot(e, l) < 0) {
                v.violation = Violation::missing_conic;
                v.witness = l;
                return false;
            }
        return true;
    });
    return v;
}

bool is_triquadric(const EvenLattice& lattice, IVec* witness) {
    DegreeSlicer s(lattice);
    auto r = s.find(3, 0);
    if (r && witness) *witness = *r;
    return !r.has_value();
}

i64 depth(const EvenLattice& lattice) {
    if (!lattice.h) throw std::invalid_argument("lattice has no polarization");
    IVec hg = mul(*lattice.h, lattice.gram);
    i64 g = 0;
    for (auto x : hg) g = std::gcd(g, std::abs(x));
    return g;
}

}  // namespace octic
