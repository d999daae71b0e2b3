#include "octic/real_structures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace octic {

namespace {

std::string cycle_type(const Perm& p) {
    std::size_t fixed = 0, swapped = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == static_cast<int>(i))
            ++fixed;
        else
            ++swapped;
    }
    return "1^" + std::to_string(fixed) + " 2^" + std::to_string(swapped / 2);
}

i64 det2(const IMat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

i64 det3(const IMat& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool splits_u2_plus_40(const IMat& g, int radius) {
    std::vector<IVec> iso;
    IVec v(3);
    for (v[0] = -radius; v[0] <= radius; ++v[0])
        for (v[1] = -radius; v[1] <= radius; ++v[1])
            for (v[2] = -radius; v[2] <= radius; ++v[2])
                if ((v[0] || v[1] || v[2]) && bilinear(v, g, v) == 0) iso.push_back(v);
    for (const IVec& e : iso) {
        IVec ge = mul(e, g);
        for (const IVec& f : iso) {
            if (dot(ge, f) != 2) continue;
            IVec gf = mul(f, g);
            IVec z{ge[1] * gf[2] - ge[2] * gf[1], ge[2] * gf[0] - ge[0] * gf[2], ge[0] * gf[1] - ge[1] * gf[0]};
            i64 d = std::gcd(std::gcd(z[0], z[1]), z[2]);
            if (d == 0) continue;
            for (i64& x : z) x /= d;
            if (bilinear(z, g, z) != 40) continue;
            IMat basis(3, 3);
            for (int j = 0; j < 3; ++j) {
                basis(0, j) = e[j];
                basis(1, j) = f[j];
                basis(2, j) = z[j];
            }
            if (std::abs(det3(basis)) == 1) return true;
        }
    }
    return false;
}

}  // namespace

RealConicReport real_conic_count(const StratumRecord& rec) {
    if (rec.lattice.rank() != 20) throw std::invalid_argument("real structures are swept on rank-20 records only");
    RealConicReport rep;
    const FanoGraph& g = rec.graph;
    const std::size_t n = g.vertices.size();
    Canonical ca = canonical_form(g, false);
    PolarizedGroup oh = polarized_group(rec.lattice, g, ca);
    SchreierSims group(n, oh.generators);
    GraphAction act(rec.lattice, g);
    const DiscriminantForm& dn = act.discriminant();

    struct Inv {
        Perm p;
        FormMap action;
        std::size_t fixed = 0;
        std::size_t fixed_lines = 0;
    };
    std::vector<Inv> invs;
    for (auto& p : group.elements()) {
        if (!perm_is_identity(perm_then(p, p))) continue;
        if (!act.preserves_host(p)) throw std::logic_error("O_h element does not preserve NS");
        Inv v;
        v.action = act.discriminant_action(p);
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] == static_cast<int>(i)) {
                ++v.fixed;
                if (g.vertices[i].degree == 1) ++v.fixed_lines;
            }
        v.p = std::move(p);
        invs.push_back(std::move(v));
    }
    rep.involutions = invs.size();

    std::map<Perm, std::size_t> best_for;
    std::map<std::string, RealStructureCandidate> best_by_type;
    for (const auto& t : rec.transcendental) {
        DiscriminantForm dt = discriminant_form(t.gram());
        std::vector<std::pair<IMat, FormMap>> reflections;
        for (const auto& m : automorphisms(t))
            if (det2(m) == -1) reflections.emplace_back(m, discriminant_action(t, dt, m));
        auto phis = isometries(dn, dt.negated());
        for (std::size_t pi = 0; pi < phis.size(); ++pi) {
            const std::size_t gluing = rep.gluings + pi;
            for (const auto& inv : invs)
                for (const auto& [m, act_t] : reflections) {
                    if (!glue_extends_to_L(dn, dt, inv.action, act_t, phis[pi])) continue;
                    ++rep.candidates;
                    const std::size_t conics = inv.fixed - inv.fixed_lines;
                    auto& b = best_for[inv.p];
                    b = std::max(b, conics);
                    if (conics < rep.max_real) break;
                    if (conics > rep.max_real) {
                        rep.max_real = conics;
                        best_by_type.clear();
                    }
                    std::string ct = cycle_type(inv.p);
                    if (!best_by_type.count(ct))
                        best_by_type[ct] = RealStructureCandidate{inv.p, m, t, gluing, inv.fixed, inv.fixed_lines, ct};
                    break;
                }
        }
        rep.gluings += phis.size();
    }
    for (auto& [ct, c] : best_by_type) rep.maximizers.push_back(std::move(c));
    for (auto& [p, f] : best_for) rep.per_involution.emplace_back(p, f);
    return rep;
}

bool u2_plus_40_genus(const StratumRecord& rec, std::string* detail) {
    if (rec.lattice.rank() != 19) {
        if (detail) *detail = "rank is not 19";
        return false;
    }
    IMat t(3, 3);
    t(0, 1) = t(1, 0) = 2;
    t(2, 2) = 40;
    Signature sig = signature(t);
    DiscriminantForm want = discriminant_form(t);
    DiscriminantForm have = discriminant_form(rec.lattice.gram).negated();
    bool ok = sig.positive == 2 && sig.negative == 1 && is_isomorphic(want, have);
    if (detail)
        *detail = ok ? "signature (2,1), discriminant forms isomorphic" : "discriminant forms differ";
    return ok;
}

DecompositionSearch u2_plus_40_search(const StratumRecord& rec, int gram_radius, int basis_radius) {
    DecompositionSearch out;
    out.gram_radius = gram_radius;
    out.basis_radius = basis_radius;
    if (rec.lattice.rank() != 19) return out;
    DiscriminantForm want = discriminant_form(rec.lattice.gram).negated();
    i64 target = -static_cast<i64>(want.size());
    const int r = gram_radius;
    IMat g(3, 3);
    for (i64 a = -r + (r & 1); a <= r; a += 2)
        for (i64 b = -r + (r & 1); b <= r; b += 2)
            for (i64 c = -r + (r & 1); c <= r; c += 2)
                for (i64 d = -r; d <= r; ++d)
                    for (i64 e = -r; e <= r; ++e)
                        for (i64 f = -r; f <= r; ++f) {
                            g(0, 0) = a, g(1, 1) = b, g(2, 2) = c;
                            g(0, 1) = g(1, 0) = d;
                            g(0, 2) = g(2, 0) = e;
                            g(1, 2) = g(2, 1) = f;
                            ++out.grams_scanned;
                            if (det3(g) != target) continue;
                            Signature sig = signature(g);
                            if (sig.positive != 2 || sig.negative != 1) continue;
                            if (!is_isomorphic(discriminant_form(g), want)) continue;
                            ++out.grams_in_genus;
                            if (splits_u2_plus_40(g, basis_radius)) ++out.decomposed;
                        }
    return out;
}

}  // namespace octic
