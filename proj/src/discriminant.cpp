#include "octic/discriminant.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace octic {

namespace {

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mod(__int128 a, i64 m) {
    __int128 r = a % m;
    if (r < 0) r += m;
    return static_cast<i64>(r);
}

i64 mpz_mod(const mpz_class& a, i64 m) {
    mpz_class r;
    mpz_class mm = static_cast<long>(m);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
    return r.get_si();
}

i64 rational_numerator(const mpq_class& v, i64 e) {
    mpq_class s = v * static_cast<long>(e);
    if (s.get_den() != 1) throw std::logic_error("form value has an unexpected denominator");
    return to_i64(s.get_num());
}

}  // namespace

std::size_t DiscriminantForm::size() const {
    std::size_t s = 1;
    for (auto d : orders) s *= static_cast<std::size_t>(d);
    return s;
}

IVec DiscriminantForm::element(std::size_t index) const {
    IVec a(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        a[i] = static_cast<i64>(index % static_cast<std::size_t>(orders[i]));
        index /= static_cast<std::size_t>(orders[i]);
    }
    return a;
}

std::size_t DiscriminantForm::index(const IVec& a) const {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        idx += static_cast<std::size_t>(mod(a[i], orders[i])) * stride;
        stride *= static_cast<std::size_t>(orders[i]);
    }
    return idx;
}

IVec DiscriminantForm::reduce(IVec a) const {
    for (std::size_t i = 0; i < orders.size(); ++i) a[i] = mod(a[i], orders[i]);
    return a;
}

IVec DiscriminantForm::add(const IVec& a, const IVec& c) const {
    IVec r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) r[i] = mod(a[i] + c[i], orders[i]);
    return r;
}

IVec DiscriminantForm::scale(const IVec& a, i64 k) const {
    IVec r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) r[i] = mod(static_cast<__int128>(a[i]) * k, orders[i]);
    return r;
}

i64 DiscriminantForm::order_of(const IVec& a) const {
    i64 o = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        i64 g = std::gcd(mod(a[i], orders[i]), orders[i]);
        o = std::lcm(o, orders[i] / g);
    }
    return o;
}

i64 DiscriminantForm::qv(const IVec& a) const {
    const i64 m = 2 * exponent;
    __int128 s = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (a[i] == 0) continue;
        s += static_cast<__int128>(a[i]) * a[i] % m * q[i];
        for (std::size_t j = i + 1; j < orders.size(); ++j)
            if (a[j] != 0) s += static_cast<__int128>(2) * a[i] * a[j] % m * b(i, j);
        s %= m;
    }
    return mod(s, m);
}

i64 DiscriminantForm::bv(const IVec& a, const IVec& c) const {
    __int128 s = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < orders.size(); ++j)
            if (c[j] != 0) s += static_cast<__int128>(a[i]) * c[j] % exponent * b(i, j);
        s %= exponent;
    }
    return mod(s, exponent);
}

mpq_class DiscriminantForm::q_value(const IVec& a) const {
    mpq_class v(static_cast<long>(qv(a)), static_cast<long>(exponent));
    v.canonicalize();
    return v;
}

mpq_class DiscriminantForm::b_value(const IVec& a, const IVec& c) const {
    mpq_class v(static_cast<long>(bv(a, c)), static_cast<long>(exponent));
    v.canonicalize();
    return v;
}

IVec DiscriminantForm::from_dual(const QVec& x, const IMat& gram) const {
    if (reducer.rows() != orders.size()) throw std::logic_error("form has no lattice reducer");
    QVec y = mul(x, to_qmat(gram));  // symmetric
    IVec a(orders.size(), 0);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        __int128 s = 0;
        for (std::size_t k = 0; k < y.size(); ++k) {
            if (y[k] == 0) continue;
            if (y[k].get_den() != 1) throw std::invalid_argument("vector is not in the dual lattice");
            s += static_cast<__int128>(reducer(i, k)) * mpz_mod(y[k].get_num(), orders[i]);
            s %= orders[i];
        }
        a[i] = mod(s, orders[i]);
    }
    return a;
}

QVec DiscriminantForm::lift(const IVec& a) const {
    if (lifts.rows() != orders.size()) throw std::logic_error("form has no lifts");
    QVec x(lifts.cols(), 0);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t k = 0; k < lifts.cols(); ++k) x[k] += mpq_class(static_cast<long>(a[i])) * lifts(i, k);
    }
    return x;
}

DiscriminantForm DiscriminantForm::negated() const {
    DiscriminantForm d = *this;
    for (auto& v : d.q) v = mod(-v, 2 * exponent);
    for (std::size_t i = 0; i < d.b.rows(); ++i)
        for (std::size_t j = 0; j < d.b.cols(); ++j) d.b(i, j) = mod(-d.b(i, j), exponent);
    return d;
}

std::vector<i64> DiscriminantForm::primes() const {
    std::vector<i64> ps;
    i64 e = exponent;
    for (i64 p = 2; p * p <= e; ++p) {
        if (e % p) continue;
        ps.push_back(p);
        while (e % p == 0) e /= p;
    }
    if (e > 1) ps.push_back(e);
    return ps;
}

DiscriminantForm DiscriminantForm::p_part(i64 p, std::vector<IVec>* embedding) const {
    std::vector<IVec> basis;
    std::vector<i64> ords;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        i64 pk = 1, d = orders[i];
        while (d % p == 0) {
            d /= p;
            pk *= p;
        }
        if (pk == 1) continue;
        IVec g = zero();
        g[i] = d;  // orders[i] / p^k
        basis.push_back(g);
        ords.push_back(pk);
    }
    if (embedding) *embedding = basis;
    return restrict_form(*this, basis, ords);
}

DiscriminantForm make_form(const std::vector<i64>& orders, const std::vector<i64>& q, const IMat& b) {
    DiscriminantForm d;
    d.orders = orders;
    d.exponent = 1;
    for (auto o : orders) d.exponent = std::lcm(d.exponent, o);
    d.q = q;
    d.b = b;
    for (auto& v : d.q) v = mod(v, 2 * d.exponent);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) d.b(i, j) = mod(b(i, j), d.exponent);
    return d;
}

DiscriminantForm restrict_form(const DiscriminantForm& parent, const std::vector<IVec>& basis,
                               const std::vector<i64>& orders) {
    const std::size_t m = basis.size();
    i64 e = 1;
    for (auto o : orders) e = std::lcm(e, o);
    std::vector<i64> q(m);
    IMat b(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        q[i] = rational_numerator(parent.q_value(basis[i]), e);
        for (std::size_t j = 0; j < m; ++j) b(i, j) = rational_numerator(parent.b_value(basis[i], basis[j]), e);
    }
    DiscriminantForm d = make_form(orders, q, b);
    if (parent.lifts.rows() == parent.orders.size() && !parent.orders.empty()) {
        d.lifts = QMat(m, parent.lifts.cols());
        for (std::size_t i = 0; i < m; ++i) d.lifts.set_row(i, parent.lift(basis[i]));
    }
    return d;
}

DiscriminantForm discriminant_form(const IMat& gram) {
    const std::size_t n = gram.rows();
    ZMat g = to_zmat(gram);
    SmithForm s = smith_form(g);
    for (const auto& d : s.diagonal)
        if (d == 0) throw std::invalid_argument("degenerate Gram matrix has no discriminant form");
    if (s.diagonal.size() != n) throw std::invalid_argument("Gram matrix is not square");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (s.diagonal[i] != 1) keep.push_back(i);
    const std::size_t m = keep.size();
    DiscriminantForm d;
    d.orders.resize(m);
    d.exponent = 1;
    for (std::size_t k = 0; k < m; ++k) {
        d.orders[k] = to_i64(s.diagonal[keep[k]]);
        d.exponent = std::lcm(d.exponent, d.orders[k]);
    }
    d.lifts = QMat(m, n);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = 0; r < n; ++r) {
            d.lifts(k, r) = mpq_class(s.right(r, keep[k]), s.diagonal[keep[k]]);
            d.lifts(k, r).canonicalize();
        }
    QMat gq = to_qmat(gram);
    QMat gl = d.lifts * gq;
    d.q.resize(m);
    d.b = IMat(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            mpq_class v = 0;
            for (std::size_t r = 0; r < n; ++r) v += gl(i, r) * d.lifts(j, r);
            i64 num = rational_numerator(v, d.exponent);
            if (i == j) d.q[i] = mod(num, 2 * d.exponent);
            d.b(i, j) = mod(num, d.exponent);
        }
    d.reducer = IMat(m, n);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = 0; r < n; ++r) d.reducer(k, r) = mpz_mod(s.left(keep[k], r), d.orders[k]);
    return d;
}

IVec apply_map(const DiscriminantForm& src, const DiscriminantForm& dst, const FormMap& f, const IVec& a) {
    IVec r = dst.zero();
    for (std::size_t i = 0; i < src.orders.size(); ++i)
        if (a[i] != 0) r = dst.add(r, dst.scale(f[i], a[i]));
    return r;
}

std::vector<FormMap> isometries(const DiscriminantForm& a, const DiscriminantForm& b, std::size_t limit) {
    std::vector<FormMap> out;
    if (a.size() != b.size() || a.exponent != b.exponent) return out;
    const std::size_t nb = b.size();
    std::vector<IVec> elems(nb);
    std::vector<i64> ord(nb), qs(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        elems[i] = b.element(i);
        ord[i] = b.order_of(elems[i]);
        qs[i] = b.qv(elems[i]);
    }
    const std::size_t m = a.orders.size();
    std::vector<std::vector<std::size_t>> cand(m);
    for (std::size_t i = 0; i < m; ++i) {
        IVec g = a.zero();
        g[i] = 1;
        i64 qa = a.qv(g);
        for (std::size_t k = 0; k < nb; ++k)
            if (ord[k] == a.orders[i] && qs[k] == qa) cand[i].push_back(k);
    }
    FormMap cur(m);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == m) {
            out.push_back(cur);
            return limit != 0 && out.size() >= limit;
        }
        for (std::size_t k : cand[i]) {
            const IVec& y = elems[k];
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (b.bv(y, cur[j]) != a.b(i, j)) ok = false;
            if (!ok) continue;
            cur[i] = y;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

bool is_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b) {
    if (a.size() != b.size() || a.exponent != b.exponent) return false;
    if (a.trivial()) return true;
    for (i64 p : a.primes()) {
        auto ap = a.p_part(p), bp = b.p_part(p);
        if (ap.size() != bp.size() || ap.exponent != bp.exponent) return false;
        if (value_profile(ap) != value_profile(bp)) return false;
        if (isometries(ap, bp, 1).empty()) return false;
    }
    return true;
}

int gauss_signature(const DiscriminantForm& d) {
    const std::size_t n = d.size();
    std::complex<double> sum = 0;
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < n; ++i) {
        double ang = pi * static_cast<double>(d.qv(d.element(i))) / static_cast<double>(d.exponent);
        sum += std::polar(1.0, ang);
    }
    double expected = std::sqrt(static_cast<double>(n));
    if (std::abs(std::abs(sum) - expected) > 1e-6 * expected)
        throw std::logic_error("Gauss sum has the wrong modulus (degenerate form?)");
    double k = std::arg(sum) / (pi / 4.0);
    long r = std::lround(k);
    if (std::abs(k - static_cast<double>(r)) > 1e-6) throw std::logic_error("Gauss sum is not an eighth root of unity");
    return static_cast<int>(mod(static_cast<i64>(r), 8));
}

Subgroup subgroup_generated(const DiscriminantForm& d, const std::vector<IVec>& gens) {
    Subgroup s;
    std::vector<char> seen(d.size(), 0);
    std::vector<IVec> frontier{d.zero()};
    seen[0] = 1;
    s.elements.push_back(0);
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                IVec y = d.add(x, g);
                std::size_t iy = d.index(y);
                if (!seen[iy]) {
                    seen[iy] = 1;
                    s.elements.push_back(iy);
                    next.push_back(y);
                }
            }
        frontier.swap(next);
    }
    std::sort(s.elements.begin(), s.elements.end());
    for (const auto& g : gens)
        if (d.index(g) != 0) s.generators.push_back(d.reduce(g));
    return s;
}

std::vector<Subgroup> isotropic_subgroups(const DiscriminantForm& d) {
    const std::size_t n = d.size();
    std::vector<IVec> iso;
    for (std::size_t i = 1; i < n; ++i) {
        IVec x = d.element(i);
        if (d.qv(x) == 0) iso.push_back(x);
    }
    std::vector<Subgroup> out;
    std::set<std::vector<std::size_t>> seen;
    Subgroup triv = subgroup_generated(d, {});
    out.push_back(triv);
    seen.insert(triv.elements);
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        const Subgroup cur = out[pos];
        for (const auto& x : iso) {
            std::size_t ix = d.index(x);
            if (std::binary_search(cur.elements.begin(), cur.elements.end(), ix)) continue;
            bool orth = true;
            for (const auto& g : cur.generators)
                if (d.bv(x, g) != 0) {
                    orth = false;
                    break;
                }
            if (!orth) continue;
            auto gens = cur.generators;
            gens.push_back(x);
            Subgroup next = subgroup_generated(d, gens);
            if (seen.insert(next.elements).second) out.push_back(std::move(next));
        }
    }
    return out;
}

std::vector<std::size_t> orthogonal_elements(const DiscriminantForm& d, const Subgroup& k) {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < d.size(); ++i) {
        IVec x = d.element(i);
        bool ok = true;
        for (const auto& g : k.generators)
            if (d.bv(x, g) != 0) {
                ok = false;
                break;
            }
        if (ok) r.push_back(i);
    }
    return r;
}

SpannedLattice overlattice(const IMat& gram, const DiscriminantForm& d, const Subgroup& k) {
    for (const auto& g : k.generators)
        if (d.qv(g) != 0) throw std::invalid_argument("glue subgroup is not isotropic");
    for (const auto& g1 : k.generators)
        for (const auto& g2 : k.generators)
            if (d.bv(g1, g2) != 0) throw std::invalid_argument("glue subgroup is not isotropic");
    const std::size_t n = gram.rows();
    QMat rows = QMat::identity(n);
    for (const auto& g : k.generators) rows.append_row(d.lift(g));
    return span_lattice(rows, gram);
}

std::vector<std::pair<i64, mpq_class>> value_profile(const DiscriminantForm& d) {
    std::vector<std::pair<i64, mpq_class>> r;
    for (std::size_t i = 0; i < d.size(); ++i) {
        IVec x = d.element(i);
        r.emplace_back(d.order_of(x), d.q_value(x));
    }
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<std::pair<i64, mpq_class>> coset_value_profile(const DiscriminantForm& d, const Subgroup& k) {
    auto perp = orthogonal_elements(d, k);
    std::vector<char> done(d.size(), 0);
    std::vector<char> in_k(d.size(), 0);
    for (auto i : k.elements) in_k[i] = 1;
    std::vector<IVec> kel;
    for (auto i : k.elements) kel.push_back(d.element(i));
    std::vector<std::pair<i64, mpq_class>> r;
    for (auto i : perp) {
        if (done[i]) continue;
        IVec x = d.element(i);
        for (const auto& y : kel) done[d.index(d.add(x, y))] = 1;
        i64 o = 1;
        IVec m = x;
        while (!in_k[d.index(m)]) {
            m = d.add(m, x);
            ++o;
        }
        r.emplace_back(o, d.q_value(x));
    }
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace octic
