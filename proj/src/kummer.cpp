#include "octic/kummer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace octic {

namespace {

// Quadratic-residue code of length 23, generator polynomial
// x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, extended by a parity bit.
constexpr std::uint32_t kGolayPoly = (1u << 11) | (1u << 10) | (1u << 6) | (1u << 5) | (1u << 4) | (1u << 2) | 1u;

std::uint32_t with_parity(std::uint32_t w23) {
    std::uint32_t parity = static_cast<std::uint32_t>(std::popcount(w23) & 1);
    return w23 | (parity << 23);
}

bool lex_less_word(std::uint32_t a, std::uint32_t b) {
    for (int j = 0; j < 24; ++j) {
        bool ia = (a >> j) & 1u, ib = (b >> j) & 1u;
        if (ia != ib) return ia;  // the word containing the smaller index first wins
    }
    return false;
}

}  // namespace

GolayCode build_golay() {
    GolayCode code;
    for (int i = 0; i < 12; ++i) code.generator[i] = with_parity(kGolayPoly << i);
    code.codewords.reserve(4096);
    for (std::uint32_t m = 0; m < 4096; ++m) {
        std::uint32_t w = 0;
        for (int i = 0; i < 12; ++i)
            if ((m >> i) & 1u) w ^= code.generator[i];
        code.codewords.push_back(w);
    }
    std::sort(code.codewords.begin(), code.codewords.end());
    return code;
}

int golay_min_weight(const GolayCode& code) {
    int best = 24;
    for (auto w : code.codewords)
        if (w != 0) best = std::min(best, std::popcount(w));
    return best;
}

Perm16 perm16_identity() {
    Perm16 p{};
    for (int i = 0; i < 16; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

Perm16 perm16_compose(const Perm16& a, const Perm16& b) {
    Perm16 r{};
    for (int i = 0; i < 16; ++i) r[i] = a[b[i]];
    return r;
}

Perm16 perm16_inverse(const Perm16& a) {
    Perm16 r{};
    for (int i = 0; i < 16; ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

SubsetMask image(const Perm16& g, SubsetMask s) {
    std::uint16_t out = 0;
    for (int i = 0; i < 16; ++i)
        if (s.contains(i)) out |= static_cast<std::uint16_t>(1u << g[i]);
    return SubsetMask(out);
}

bool KummerStructure::in_C(SubsetMask s) const { return c_flag_[s.bits] != 0; }
bool KummerStructure::in_O(SubsetMask s) const { return o_flag_[s.bits] != 0; }
bool KummerStructure::in_K(SubsetMask s) const { return k_flag_[s.bits] != 0; }

std::vector<SubsetMask> KummerStructure::C(int n) const {
    std::vector<SubsetMask> r;
    for (auto s : even_sets)
        if (s.size() == n) r.push_back(s);
    return r;
}

std::vector<SubsetMask> KummerStructure::K(int n) const {
    std::vector<SubsetMask> r;
    for (auto s : kummer8)
        if (s.size() == n) r.push_back(s);
    return r;
}

KummerStructure build_kummer_structure(const GolayCode& code) {
    std::uint32_t delta_word = 0;
    bool found = false;
    for (auto w : code.codewords) {
        if (std::popcount(w) != 16) continue;
        if (!found || lex_less_word(w, delta_word)) {
            delta_word = w;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("code has no weight-16 codeword");

    KummerStructure ks;
    for (int j = 0; j < 24; ++j)
        if ((delta_word >> j) & 1u) ks.delta_coordinates.push_back(j);
    auto restrict = [&](std::uint32_t w) {
        std::uint16_t m = 0;
        for (int i = 0; i < 16; ++i)
            if ((w >> ks.delta_coordinates[i]) & 1u) m |= static_cast<std::uint16_t>(1u << i);
        return SubsetMask(m);
    };

    std::set<SubsetMask> cset;
    for (auto w : code.codewords) {
        cset.insert(restrict(w));
        if (std::popcount(w) == 8 && (w & ~delta_word) == 0) ks.octads.push_back(restrict(w));
    }
    std::sort(ks.octads.begin(), ks.octads.end());
    ks.even_sets.assign(cset.begin(), cset.end());

    ks.kummer.push_back(SubsetMask());
    ks.kummer.insert(ks.kummer.end(), ks.octads.begin(), ks.octads.end());
    ks.kummer.push_back(SubsetMask::full());
    std::sort(ks.kummer.begin(), ks.kummer.end());

    ks.c_flag_.assign(1u << 16, 0);
    ks.o_flag_.assign(1u << 16, 0);
    ks.k_flag_.assign(1u << 16, 0);
    for (auto s : ks.even_sets) ks.c_flag_[s.bits] = 1;
    for (auto s : ks.kummer) ks.o_flag_[s.bits] = 1;

    bool have_kappa = false;
    for (auto s : ks.even_sets) {
        if (s.size() != 4) continue;
        if (!have_kappa || lex_less(s, ks.kappa)) {
            ks.kappa = s;
            have_kappa = true;
        }
    }
    if (!have_kappa) throw std::runtime_error("no 4-element even set");
    for (auto w : ks.kummer) ks.kummer8.push_back(ks.kappa ^ w);
    std::sort(ks.kummer8.begin(), ks.kummer8.end());
    for (auto s : ks.kummer8) ks.k_flag_[s.bits] = 1;
    return ks;
}

Parity parity(SubsetMask s, const KummerStructure& ks) {
    if (!ks.in_C(s)) throw std::invalid_argument("parity is defined on C_* only");
    int p = (s & ks.kappa).size() & 1;
    for (auto k : ks.kummer8)
        if (((s & k).size() & 1) != p) throw std::logic_error("parity depends on the choice of kappa");
    return p ? Parity::odd : Parity::even;
}

namespace {

// Affine coordinates on the 16 points: O_* is the first-order Reed-Muller
// code, so the 4-point planes are the 4-sets lying in exactly 3 octads and
// x + y (relative to the origin 0) is the fourth point of the plane {0,x,y}.
struct AffineFrame {
    std::array<int, 16> coord{};  // point -> vector in F_2^4
    std::array<int, 16> point{};  // vector -> point
};

AffineFrame affine_frame(const KummerStructure& ks) {
    auto fourth = [&](int a, int b, int c) {
        for (int d = 0; d < 16; ++d) {
            if (d == a || d == b || d == c) continue;
            SubsetMask q = SubsetMask::from_indices({a, b, c, d});
            int cnt = 0;
            for (auto o : ks.octads)
                if (q.subset_of(o)) ++cnt;
            if (cnt == 3) return d;
        }
        throw std::logic_error("no affine plane through three points");
    };
    // add(x, y) relative to origin 0
    auto add = [&](int x, int y) {
        if (x == 0) return y;
        if (y == 0) return x;
        if (x == y) return 0;
        return fourth(0, x, y);
    };
    AffineFrame f;
    f.point.fill(-1);
    f.point[0] = 0;
    f.coord[0] = 0;
    std::vector<int> basis;
    int filled = 1;
    for (int cand = 1; cand < 16 && basis.size() < 4; ++cand) {
        bool known = false;
        for (int v = 0; v < 16; ++v)
            if (f.point[v] == cand) known = true;
        if (known) continue;
        int bit = 1 << basis.size();
        basis.push_back(cand);
        for (int v = 0; v < bit; ++v) {
            int p = add(f.point[v], cand);
            f.point[v | bit] = p;
            ++filled;
        }
    }
    if (filled != 16) throw std::logic_error("failed to build affine frame");
    for (int v = 0; v < 16; ++v) f.coord[f.point[v]] = v;
    return f;
}

int mat_apply(const std::array<int, 4>& cols, int v) {
    int r = 0;
    for (int i = 0; i < 4; ++i)
        if ((v >> i) & 1) r ^= cols[i];
    return r;
}

}  // namespace

PermGroup stabilizer_gamma(const KummerStructure& ks) {
    AffineFrame f = affine_frame(ks);
    PermGroup g;
    // Backtrack over column images of invertible 4x4 matrices, then
    // translations; every affine map preserves O_*.
    std::array<int, 4> cols{};
    std::vector<Perm16> elems;
    auto rec = [&](auto&& self, int k, int span_mask) -> void {
        if (k == 4) {
            for (int t = 0; t < 16; ++t) {
                Perm16 p{};
                for (int x = 0; x < 16; ++x)
                    p[x] = static_cast<std::uint8_t>(f.point[mat_apply(cols, f.coord[x]) ^ t]);
                if (ks.in_K(image(p, ks.kappa))) elems.push_back(p);
            }
            return;
        }
        for (int c = 1; c < 16; ++c) {
            if ((span_mask >> c) & 1) continue;
            cols[k] = c;
            int next = span_mask;
            for (int v = 0; v < 16; ++v)
                if ((span_mask >> v) & 1) next |= 1 << (v ^ c);
            self(self, k + 1, next);
        }
    };
    rec(rec, 0, 1);
    std::sort(elems.begin(), elems.end());
    // sanity: the result must preserve the octads
    for (const auto& p : elems)
        for (auto o : ks.octads)
            if (!ks.in_O(image(p, o))) throw std::logic_error("affine map does not preserve O_8");
    g.elements = std::move(elems);

    // Greedy generating set.
    std::set<Perm16> closure{perm16_identity()};
    for (const auto& p : g.elements) {
        if (closure.count(p)) continue;
        g.generators.push_back(p);
        std::vector<Perm16> frontier(closure.begin(), closure.end());
        while (!frontier.empty()) {
            std::vector<Perm16> next;
            for (const auto& x : frontier)
                for (const auto& s : g.generators) {
                    Perm16 y = perm16_compose(s, x);
                    if (closure.insert(y).second) next.push_back(y);
                }
            frontier.swap(next);
        }
        if (closure.size() == g.elements.size()) break;
    }
    return g;
}

SubsetMask class_key(SubsetMask s, const KummerStructure& ks) {
    SubsetMask best = s;
    for (auto w : ks.kummer) best = std::min(best, s ^ w);
    return best;
}

SubsetMask big_class_key(SubsetMask s, const KummerStructure& ks) {
    SubsetMask best = class_key(s, ks);
    for (auto k : ks.kummer8) best = std::min(best, s ^ k);
    return best;
}

namespace {
bool size_then_mask(SubsetMask a, SubsetMask b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}
std::vector<SubsetMask> filter_n(const std::vector<SubsetMask>& v, int n) {
    std::vector<SubsetMask> r;
    for (auto s : v)
        if (s.size() == n) r.push_back(s);
    return r;
}
}  // namespace

std::vector<SubsetMask> EqClasses::cl_n(int n) const { return filter_n(cl, n); }
std::vector<SubsetMask> EqClasses::Cl_n(int n) const { return filter_n(Cl, n); }

EqClasses eq_classes(SubsetMask s, const KummerStructure& ks) {
    EqClasses r;
    std::set<SubsetMask> a, b;
    for (auto w : ks.kummer) a.insert(s ^ w);
    b = a;
    for (auto k : ks.kummer8) b.insert(s ^ k);
    r.cl.assign(a.begin(), a.end());
    r.Cl.assign(b.begin(), b.end());
    std::sort(r.cl.begin(), r.cl.end(), size_then_mask);
    std::sort(r.Cl.begin(), r.Cl.end(), size_then_mask);
    return r;
}

SetKind set_kind(SubsetMask s, const KummerStructure& ks) {
    if (ks.in_O(s)) return SetKind::kummer;
    if (ks.in_K(s)) return SetKind::kummer8;
    return parity(s, ks) == Parity::even ? SetKind::even : SetKind::odd;
}

std::string to_string(SetKind k) {
    switch (k) {
        case SetKind::even: return "even";
        case SetKind::odd: return "odd";
        case SetKind::kummer: return "O";
        case SetKind::kummer8: return "K";
    }
    return "?";
}

bool contains_kappa4(SubsetMask s, const KummerStructure& ks) {
    for (auto k : ks.kummer8)
        if (k.size() == 4 && k.subset_of(s)) return true;
    return false;
}

std::string OrbitCell::label() const {
    std::string s = std::to_string(classes) + "x";
    if (class_parts.size() == 1) return s + std::to_string(class_parts[0]);
    s += "(";
    for (std::size_t i = 0; i < class_parts.size(); ++i) s += (i ? "+" : "") + std::to_string(class_parts[i]);
    return s + ")";
}

std::vector<SubsetMask> orbit_representatives(const PermGroup& gamma, const std::vector<SubsetMask>& sets) {
    std::set<SubsetMask> seen;
    std::vector<SubsetMask> reps;
    std::vector<SubsetMask> sorted = sets;
    std::sort(sorted.begin(), sorted.end());
    for (auto s : sorted) {
        if (seen.count(s)) continue;
        reps.push_back(s);
        for (const auto& g : gamma.elements) seen.insert(image(g, s));
    }
    return reps;
}

std::vector<OrbitCell> gamma_orbits(const PermGroup& gamma, const KummerStructure& ks) {
    std::vector<OrbitCell> cells;
    const SetKind kinds[] = {SetKind::even, SetKind::odd, SetKind::kummer, SetKind::kummer8};
    for (int n = 0; n <= 16; ++n) {
        auto cn = ks.C(n);
        if (cn.empty()) continue;
        for (SetKind kind : kinds) {
            std::vector<SubsetMask> members;
            for (auto s : cn)
                if (set_kind(s, ks) == kind) members.push_back(s);
            if (members.empty()) continue;
            OrbitCell cell;
            cell.n = n;
            cell.kind = kind;
            cell.orbits = static_cast<int>(orbit_representatives(gamma, members).size());
            std::set<SubsetMask> keys;
            for (auto s : members) keys.insert(class_key(s, ks));
            cell.classes = static_cast<int>(keys.size());
            // class_n of the first member, split by the K_4-containment invariant
            auto cls = eq_classes(members.front(), ks).cl_n(n);
            int with = 0, without = 0;
            for (auto s : cls) (contains_kappa4(s, ks) ? with : without)++;
            if (cell.orbits > 1 && with > 0 && without > 0) {
                cell.class_parts = {std::min(with, without), std::max(with, without)};
            } else {
                cell.class_parts = {with + without};
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace octic
