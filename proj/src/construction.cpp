#include "octic/construction.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace octic {

namespace {

i64 imod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

IMat base_ambient() {
    IMat a(kBaseGenerators, kBaseGenerators);
    for (std::size_t i = 0; i < 16; ++i) {
        a(i, i) = -2;
        a(i, kH) = a(kH, i) = 2;
    }
    a(kH, kH) = 8;
    return a;
}

}  // namespace

std::string Pattern::label() const {
    return std::string(eps == 1 ? "l" : "c") + std::to_string(p()) + "-" + std::to_string(q());
}

std::string PatternShape::label() const {
    return std::string(eps == 1 ? "l" : "c") + std::to_string(p) + "-" + std::to_string(q);
}

PatternShape parse_pattern(const std::string& s) {
    PatternShape r;
    if (s.size() < 4 || (s[0] != 'l' && s[0] != 'c')) throw std::invalid_argument("bad pattern literal: " + s);
    r.eps = s[0] == 'l' ? 1 : 2;
    auto dash = s.find('-');
    if (dash == std::string::npos || dash < 2 || dash + 1 >= s.size()) throw std::invalid_argument("bad pattern literal: " + s);
    try {
        std::size_t used = 0;
        r.p = std::stoi(s.substr(1, dash - 1), &used);
        if (used != dash - 1) throw std::invalid_argument("");
        r.q = std::stoi(s.substr(dash + 1), &used);
        if (used != s.size() - dash - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad pattern literal: " + s);
    }
    if (r.p < 0 || r.q < 0 || r.p + r.q > 16) throw std::invalid_argument("pattern supports exceed 16 points: " + s);
    return r;
}

QVec ExtLattice::generator(std::size_t j) const {
    QVec v(dim());
    v[j] = 1;
    return v;
}

QVec ExtLattice::coords(const QVec& v) const { return coordinates_in(basis, v); }

QVec ExtLattice::ambient_of(const IVec& c) const {
    QVec v(dim());
    for (std::size_t r = 0; r < c.size(); ++r) {
        if (c[r] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) v[j] += c[r] * basis(r, j);
    }
    return v;
}

bool ExtLattice::contains(const QVec& v) const {
    try {
        return is_integral(coords(v));
    } catch (const std::invalid_argument&) {
        return false;
    }
}

IVec ExtLattice::h_coords() const {
    QVec c = coords(generator(kH));
    IVec r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = to_i64(c[i]);
    return r;
}

std::vector<IVec> ExtLattice::delta_coords() const {
    std::vector<IVec> out;
    for (std::size_t e = 0; e < 16; ++e) {
        QVec c = coords(generator(e));
        IVec r(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) r[i] = to_i64(c[i]);
        out.push_back(std::move(r));
    }
    return out;
}

EvenLattice ExtLattice::lattice() const {
    EvenLattice l;
    l.gram = gram;
    l.h = h_coords();
    l.delta = delta_coords();
    l.validate();
    return l;
}

QVec sum_vector(SubsetMask s, std::size_t dim) {
    QVec v(dim);
    for (int i : s.indices()) v[i] = 1;
    return v;
}

QVec half_vector(SubsetMask s, SubsetMask r, std::size_t dim) {
    QVec v(dim);
    for (int i : (s & r).indices()) v[i] = mpq_class(1, 2);
    for (int i : s.minus(r).indices()) v[i] = mpq_class(-1, 2);
    return v;
}

QVec h_vector(std::size_t dim) {
    QVec v(dim);
    v[kH] = 1;
    return v;
}

QVec theta_vector(std::size_t dim) {
    QVec v = sum_vector(SubsetMask::full(), dim);
    v[kH] = 1;
    return v;
}

ExtLattice build_lambda_tilde(const KummerStructure& ks) {
    ExtLattice n;
    n.ambient = base_ambient();
    QMat rows(0, 0);
    for (std::size_t i = 0; i < kBaseGenerators; ++i) {
        QVec v(kBaseGenerators);
        v[i] = 1;
        rows.append_row(v);
    }
    for (SubsetMask w : ks.kummer) {
        QVec v = sum_vector(w);
        for (auto& x : v) x /= 2;
        rows.append_row(v);
    }
    for (SubsetMask k : ks.kummer8) {
        QVec v = half_vector(k, SubsetMask());
        v[kH] = mpq_class(1, 2);
        rows.append_row(v);
    }
    SpannedLattice s = span_lattice(rows, n.ambient);  // throws on a wrong glue set
    n.basis = s.basis;
    n.gram = s.gram;
    return n;
}

std::vector<BBConic> bb_conics(const KummerStructure& ks) {
    std::vector<BBConic> out;
    for (SubsetMask k : ks.K(4)) {
        for (int i : k.indices()) {
            BBConic c;
            c.kappa = k;
            c.point = i;
            c.vector = half_vector(k, SubsetMask::singleton(i));
            c.vector[kH] = mpq_class(1, 2);
            c.pattern.eps = 2;
            c.pattern.supp1 = ~k;
            c.pattern.supp2 = k.minus(SubsetMask::singleton(i));
            out.push_back(c);
        }
    }
    return out;
}

Pattern pattern_of(const ExtLattice& n, const QVec& v) {
    Pattern p;
    QVec av = mul(v, to_qmat(n.ambient));
    p.eps = to_i64(av[kH]);
    std::uint16_t s1 = 0, s2 = 0;
    for (int i = 0; i < 16; ++i) {
        if (av[i] == 1) s1 |= static_cast<std::uint16_t>(1u << i);
        if (av[i] == 2) s2 |= static_cast<std::uint16_t>(1u << i);
    }
    p.supp1 = SubsetMask(s1);
    p.supp2 = SubsetMask(s2);
    return p;
}

mpq_class projected_norm(int p, int q, int eps) {
    mpq_class s = p + 2 * q + eps;
    return mpq_class(-p, 2) - 2 * q + s * s / 40;
}

std::string to_string(ExtensionStatus s) {
    switch (s) {
        case ExtensionStatus::accepted: return "accepted";
        case ExtensionStatus::non_integral: return "non-integral";
        case ExtensionStatus::non_hyperbolic: return "non-hyperbolic";
        case ExtensionStatus::degenerate: return "degenerate";
    }
    return "?";
}

ExtensionResult extend(const ExtLattice& base, const Pattern& pattern, const std::vector<i64>& pairings) {
    if (!(pattern.supp1 & pattern.supp2).empty()) throw std::invalid_argument("pattern supports intersect");
    if (pairings.size() != base.extra()) throw std::invalid_argument("one pairing per existing extra generator is required");
    ExtensionResult res;
    const std::size_t d = base.dim();
    ExtLattice n;
    n.patterns = base.patterns;
    n.patterns.push_back(pattern);
    n.ambient = IMat(d + 1, d + 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) n.ambient(i, j) = base.ambient(i, j);
    for (int i = 0; i < 16; ++i) {
        i64 v = pattern.supp1.contains(i) ? 1 : pattern.supp2.contains(i) ? 2 : 0;
        n.ambient(i, d) = n.ambient(d, i) = v;
    }
    n.ambient(kH, d) = n.ambient(d, kH) = pattern.eps;
    for (std::size_t j = 0; j < pairings.size(); ++j)
        n.ambient(kBaseGenerators + j, d) = n.ambient(d, kBaseGenerators + j) = pairings[j];
    n.ambient(d, d) = -2;

    // u must pair integrally with every basis vector of the base.
    for (std::size_t r = 0; r < base.rank(); ++r) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (base.basis(r, j) != 0) s += base.basis(r, j) * n.ambient(j, d);
        if (s.get_den() != 1) {
            res.status = ExtensionStatus::non_integral;
            res.detail = "pairing with basis vector " + std::to_string(r) + " is " + s.get_str();
            return res;
        }
    }
    n.basis = QMat(base.rank() + 1, d + 1);
    for (std::size_t r = 0; r < base.rank(); ++r)
        for (std::size_t j = 0; j < d; ++j) n.basis(r, j) = base.basis(r, j);
    n.basis(base.rank(), d) = 1;
    n.gram = to_imat(n.basis * to_qmat(n.ambient) * n.basis.transposed());
    Signature sig = signature(n.gram);
    if (sig.zero > 0) {
        res.status = ExtensionStatus::degenerate;
        res.detail = "u lies in the rational span of the base";
        return res;
    }
    if (sig.positive != 1) {
        res.status = ExtensionStatus::non_hyperbolic;
        res.detail = "signature (" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) + ")";
        return res;
    }
    res.lattice = std::move(n);
    return res;
}

ExtensionResult extend_by_pattern(const ExtLattice& lambda, const Pattern& pattern) {
    if (lambda.extra() != 0) throw std::invalid_argument("extend_by_pattern expects Λ̃ itself");
    return extend(lambda, pattern, {});
}

std::vector<SylvesterCell> sylvester_table(int eps, const KummerStructure& ks, int u_norm, bool inclusive) {
    std::vector<SylvesterCell> out;
    for (int p = 0; p <= 16; p += 2) {
        bool has_set = false;
        for (SubsetMask s : ks.C(p)) {
            int par = (s & ks.kappa).size() % 2;
            if (par == eps % 2) has_set = true;
        }
        for (int q = 0; p + q <= 16; ++q) {
            SylvesterCell c;
            c.p = p;
            c.q = q;
            mpq_class un = projected_norm(p, q, eps);
            c.survives = inclusive ? un >= u_norm : un > u_norm;
            c.parity_or_orbit_excluded = !has_set;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<SubsetMask> kernel_class(const ExtLattice& n, const QVec& u) {
    QVec au = mul(u, to_qmat(n.ambient));
    for (int i = 0; i < 16; ++i)
        if (au[i] != 0) throw std::invalid_argument("kernel_class: vector is not orthogonal to the Kummer divisors");
    const std::size_t r = n.rank();
    if (r > 64) throw std::invalid_argument("kernel_class: rank too large");
    auto parity_bits = [&](const QVec& v) {
        QVec c = n.coords(v);
        if (!is_integral(c)) throw std::invalid_argument("kernel_class: vector not in the lattice");
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class z = c[i].get_num() % 2;
            if (z != 0) bits |= std::uint64_t{1} << i;
        }
        return bits;
    };
    std::uint64_t target = parity_bits(u);
    std::array<std::uint64_t, 16> eb{};
    for (int i = 0; i < 16; ++i) eb[i] = parity_bits(n.generator(i));
    mpq_class un = n.dot(u, u);
    if (un.get_den() != 1) throw std::invalid_argument("kernel_class: non-integral norm");
    i64 norm = to_i64(un);
    std::vector<SubsetMask> out;
    for (std::uint32_t m = 0; m < (1u << 16); ++m) {
        std::uint64_t acc = target;
        for (int i = 0; i < 16; ++i)
            if (m >> i & 1u) acc ^= eb[i];
        if (acc != 0) continue;
        SubsetMask s(static_cast<std::uint16_t>(m));
        if (imod(2 * s.size() - norm, 8) != 0) continue;
        out.push_back(s);
    }
    return out;
}

std::string ClusterSignature::label() const {
    mpq_class r = delta2_square * delta2_order;
    std::string s = r.get_str() + "/" + std::to_string(delta2_order) + ",";
    s += delta5 == 0 ? "0" : "±" + std::to_string(std::abs(delta5));
    return s;
}

LambdaDiscriminant lambda_discriminant(const ExtLattice& lambda) {
    LambdaDiscriminant ld;
    ld.basis = lambda.basis;
    ld.gram = lambda.gram;
    ld.gram_inverse = inverse(to_qmat(lambda.gram));
    ld.form = discriminant_form(lambda.gram);
    QVec th = theta_vector(lambda.dim());
    QVec c5 = th, c4 = th;
    for (auto& x : c5) x /= 5;
    for (auto& x : c4) x /= 4;
    ld.eta5 = delta_image(ld, lambda.ambient, c5);
    ld.eta2 = delta_image(ld, lambda.ambient, c4);
    return ld;
}

IVec delta_image(const LambdaDiscriminant& ld, const IMat& ambient, const QVec& v) {
    const std::size_t r = ld.basis.rows();
    QVec av = mul(v, to_qmat(ambient));
    QVec f(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < ld.basis.cols(); ++j)
            if (ld.basis(i, j) != 0) f[i] += ld.basis(i, j) * av[j];
    if (!is_integral(f)) throw std::invalid_argument("delta_image: vector does not pair integrally with Λ̃");
    QVec x = mul(f, ld.gram_inverse);
    return ld.form.from_dual(x, ld.gram);
}

ClusterSignature cluster_signature(const LambdaDiscriminant& ld, const IMat& ambient, const QVec& v) {
    const DiscriminantForm& d = ld.form;
    IVec a = delta_image(ld, ambient, v);
    // Split by the CRT idempotents of the exponent 2^k * m.
    i64 e = d.exponent, two = 1;
    while (e % 2 == 0) {
        e /= 2;
        two *= 2;
    }
    i64 idem2 = 0;  // ≡ 1 mod two, ≡ 0 mod e
    for (i64 x = 0; x < two * e; x += e)
        if (imod(x, two) == 1 % two) {
            idem2 = x;
            break;
        }
    IVec a2 = d.scale(a, idem2);
    IVec a5 = d.reduce(IVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) a5[i] = a[i] - a2[i];
    a5 = d.reduce(a5);
    ClusterSignature s;
    s.delta2_order = d.order_of(a2);
    s.delta2_square = d.q_value(a2);
    s.delta5 = 99;
    for (int c = -2; c <= 2; ++c)
        if (d.scale(ld.eta5, c) == a5) s.delta5 = c;
    if (s.delta5 == 99) throw std::logic_error("5-part of a Λ̃ discriminant element is not a multiple of θ/5");
    return s;
}

}  // namespace octic
