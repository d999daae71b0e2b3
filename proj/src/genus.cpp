#include "octic/genus.hpp"

#include <stdexcept>

namespace octic {

namespace {

i64 imod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 ipow(i64 p, int k) {
    i64 r = 1;
    while (k-- > 0) r *= p;
    return r;
}

int valuation(i64 n, i64 p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<IVec> all_elements(const DiscriminantForm& d) {
    std::vector<IVec> r(d.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = d.element(i);
    return r;
}

// numerator of p^k * (value num/e), assumed integral
i64 scaled(i64 num, i64 e, i64 pk) {
    __int128 s = static_cast<__int128>(num) * pk;
    if (s % e != 0) throw std::logic_error("unexpected denominator in a Jordan block");
    return static_cast<i64>(s / e);
}

}  // namespace

int legendre(i64 a, i64 p) {
    a = imod(a, p);
    if (a == 0) return 0;
    i64 r = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = static_cast<i64>(static_cast<__int128>(r) * base % p);
        base = static_cast<i64>(static_cast<__int128>(base) * base % p);
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

std::vector<JordanBlock> jordan_decomposition(const DiscriminantForm& dp, i64 p) {
    std::vector<JordanBlock> blocks;
    std::vector<IVec> s = all_elements(dp);
    const i64 e = dp.exponent;
    while (s.size() > 1) {
        i64 maxord = 1;
        for (const auto& x : s) maxord = std::max(maxord, dp.order_of(x));
        int k = valuation(maxord, p);
        // b(x, x) of exact order p^k makes <x> an orthogonal summand
        const IVec* diag = nullptr;
        for (const auto& x : s) {
            if (dp.order_of(x) != maxord) continue;
            i64 bn = dp.bv(x, x);  // over e
            if (scaled(bn, e, maxord) % p != 0) {
                diag = &x;
                break;
            }
        }
        if (diag) {
            JordanBlock blk;
            blk.p = p;
            blk.k = k;
            blk.kind = JordanBlock::Kind::cyclic;
            blk.value = imod(scaled(dp.qv(*diag), e, maxord), 2 * maxord);
            blocks.push_back(blk);
            IVec x = *diag;
            std::vector<IVec> rest;
            for (const auto& y : s)
                if (dp.bv(x, y) == 0) rest.push_back(y);
            s.swap(rest);
            continue;
        }
        if (p != 2) throw std::logic_error("odd p-primary form without a diagonal element");
        const IVec *bx = nullptr, *by = nullptr;
        for (std::size_t i = 0; i < s.size() && !bx; ++i) {
            if (dp.order_of(s[i]) != maxord) continue;
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (dp.order_of(s[j]) != maxord) continue;
                if (scaled(dp.bv(s[i], s[j]), e, maxord) % 2 != 0) {
                    bx = &s[i];
                    by = &s[j];
                    break;
                }
            }
        }
        if (!bx) throw std::logic_error("degenerate 2-primary form");
        IVec x = *bx, y = *by;
        JordanBlock blk;
        blk.p = 2;
        blk.k = k;
        blk.kind = JordanBlock::Kind::v;
        for (i64 a = 0; a < maxord && blk.kind == JordanBlock::Kind::v; ++a)
            for (i64 c = 0; c < maxord; ++c) {
                if (a % 2 == 0 && c % 2 == 0) continue;
                IVec z = dp.add(dp.scale(x, a), dp.scale(y, c));
                if (dp.qv(z) == 0) {
                    blk.kind = JordanBlock::Kind::u;
                    break;
                }
            }
        blocks.push_back(blk);
        std::vector<IVec> rest;
        for (const auto& z : s)
            if (dp.bv(x, z) == 0 && dp.bv(y, z) == 0) rest.push_back(z);
        s.swap(rest);
    }
    return blocks;
}

bool genus_exists(int t_plus, int t_minus, const DiscriminantForm& d, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (t_plus < 0 || t_minus < 0 || t_plus + t_minus < 1) return fail("invalid signature");
    const int rank = t_plus + t_minus;
    if (d.trivial()) {
        if (imod(t_plus - t_minus, 8) != 0) return fail("unimodular even lattice needs signature 0 mod 8");
        return true;
    }
    int sig = gauss_signature(d);
    if (imod(t_plus - t_minus - sig, 8) != 0) return fail("signature congruence fails");
    const i64 order = static_cast<i64>(d.size());
    for (i64 p : d.primes()) {
        DiscriminantForm dp = d.p_part(p);
        const int len = static_cast<int>(dp.length());
        if (rank < len) return fail("rank below the length of the " + std::to_string(p) + "-part");
        if (rank > len) continue;
        auto blocks = jordan_decomposition(dp, p);
        const int vp = valuation(order, p);
        i64 rest = order / ipow(p, vp);
        if (p != 2) {
            i64 lhs = (t_minus % 2 ? -1 : 1) * imod(rest, p);
            int prod = 1;
            for (const auto& b : blocks) prod *= legendre(b.value, p);
            if (legendre(lhs, p) != prod) return fail("determinant condition fails at p = " + std::to_string(p));
        } else {
            // exception: an orthogonal summand of order 2 with odd value
            bool exception = false;
            for (std::size_t i = 1; i < dp.size() && !exception; ++i) {
                IVec x = dp.element(i);
                if (dp.order_of(x) != 2) continue;
                if (scaled(dp.bv(x, x), dp.exponent, 2) % 2 != 0) exception = true;
            }
            if (exception) continue;
            i64 unit = 1;
            for (const auto& b : blocks) {
                i64 w = 1;
                if (b.kind == JordanBlock::Kind::cyclic) w = imod(b.value, 8);
                else if (b.kind == JordanBlock::Kind::u) w = 7;
                else w = 3;
                unit = imod(unit * w, 8);
            }
            i64 r8 = imod(rest, 8);
            if (r8 != unit && r8 != imod(-unit, 8)) return fail("determinant condition fails at p = 2");
        }
    }
    return true;
}

}  // namespace octic
