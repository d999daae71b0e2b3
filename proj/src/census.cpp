#include "octic/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "octic/genus.hpp"
#include "octic/linalg.hpp"
#include "octic/parallel.hpp"

namespace octic {

namespace {

constexpr std::int64_t kLambdaDet = 640;

struct Shape {
    int type;
    int eps;
    int p;
};
// Primary pattern of each cluster type.
constexpr Shape kShapes[] = {{1, 1, 4}, {2, 1, 6}, {3, 2, 4}, {4, 2, 6}, {5, 2, 8}};

QVec pattern_functional(const Pattern& pat) {
    QVec a(kBaseGenerators);
    for (int i = 0; i < 16; ++i) a[i] = pat.supp1.contains(i) ? 1 : pat.supp2.contains(i) ? 2 : 0;
    a[kH] = pat.eps;
    return a;
}

mpq_class qform(const QVec& a, const QMat& m, const QVec& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += a[i] * m(i, j) * b[j];
    }
    return s;
}

QMat lambda_inverse(const CensusContext& ctx) {
    return inverse(to_qmat(ctx.lambda.ambient));
}

std::vector<SubsetMask> sets_with_parity(const KummerStructure& ks, int p, int eps) {
    std::vector<SubsetMask> out;
    for (SubsetMask s : ks.C(p))
        if ((parity(s, ks) == Parity::odd) == (eps == 1)) out.push_back(s);
    return out;
}

// q-subsets of `pool`, one per orbit of `stab`.
std::vector<SubsetMask> subset_orbit_reps(const std::vector<int>& pool, int q, const std::vector<Perm16>& stab) {
    std::set<SubsetMask> reps;
    std::vector<int> pick(static_cast<std::size_t>(q));
    std::iota(pick.begin(), pick.end(), 0);
    const int n = static_cast<int>(pool.size());
    if (q > n) return {};
    while (true) {
        SubsetMask s;
        for (int i : pick) s = s | SubsetMask::singleton(pool[static_cast<std::size_t>(i)]);
        SubsetMask best = s;
        for (const auto& g : stab) best = std::min(best, image(g, s));
        reps.insert(best);
        int i = q - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - q + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < q; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return {reps.begin(), reps.end()};
}

int classify_cluster(bool has_line, int delta5) {
    if (has_line) return delta5 == 0 ? 1 : 2;
    switch (std::abs(delta5)) {
        case 2: return 3;
        case 1: return 4;
        default: return 5;
    }
}

void verify_merge(const StratumRecord& a, const StratumRecord& b) {
    if (!isomorphism(to_colored(a.graph, true), to_colored(b.graph, true)))
        throw std::logic_error("equal certificates without an isomorphism");
}

// Adds rec to out unless its (graph, δ) class is present.
bool insert_unique(std::vector<StratumRecord>& out, std::map<std::string, std::size_t>& seen, StratumRecord rec) {
    auto it = seen.find(rec.cert_delta);
    if (it != seen.end()) {
        verify_merge(out[it->second], rec);
        return false;
    }
    seen.emplace(rec.cert_delta, out.size());
    out.push_back(std::move(rec));
    return true;
}

bool record_order(const StratumRecord& a, const StratumRecord& b) {
    auto ka = std::make_tuple(-static_cast<long>(a.irreducible_conics + a.reducible_conics), -static_cast<long>(a.lines),
                              a.cluster_label(), a.det, a.cert_delta);
    auto kb = std::make_tuple(-static_cast<long>(b.irreducible_conics + b.reducible_conics), -static_cast<long>(b.lines),
                              b.cluster_label(), b.det, b.cert_delta);
    return ka < kb;
}

void finish(const CensusContext& ctx, std::vector<StratumRecord>& recs) {
    parallel_for(recs.size(), [&](std::size_t i) {
        StratumRecord full = make_record(ctx, recs[i].ext, recs[i].codim, recs[i].generators, true);
        full.parent = recs[i].parent;
        recs[i] = std::move(full);
    });
    std::stable_sort(recs.begin(), recs.end(), record_order);
}

// Candidate lattice -> geometric, spanned records (cheap invariants only).
void harvest(const CensusContext& ctx, const ExtLattice& m, int codim, const std::vector<GeneratorSpec>& gens, int parent,
             std::vector<StratumRecord>& out, std::map<std::string, std::size_t>& seen, CensusStats* stats) {
    std::size_t tried = 0;
    auto exts = finite_index_geometric_extensions(m, &tried);
    if (stats) {
        stats->overlattices_tried += tried;
        stats->geometric_lattices += exts.size();
    }
    for (const auto& n : exts) {
        StratumRecord rec = make_record(ctx, n, codim, gens, false);
        if (rec.fano_index == 0) continue;
        if (stats) ++stats->spanned_lattices;
        rec.parent = parent;
        insert_unique(out, seen, std::move(rec));
    }
}

}  // namespace

std::string u128_string(unsigned __int128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    return s;
}

CensusContext make_census_context() {
    CensusContext ctx;
    ctx.code = build_golay();
    ctx.ks = build_kummer_structure(ctx.code);
    ctx.gamma = stabilizer_gamma(ctx.ks);
    ctx.lambda = build_lambda_tilde(ctx.ks);
    ctx.ld = lambda_discriminant(ctx.lambda);
    return ctx;
}

bool is_geometric(const EvenLattice& lattice, std::string* reason) {
    const auto r = static_cast<int>(lattice.rank());
    if (r > 20) {
        if (reason) *reason = "rank exceeds 20";
        return false;
    }
    DiscriminantForm d = discriminant_form(lattice.gram).negated();
    if (r == 20) {
        if (forms_with_discriminant(d).empty()) {
            if (reason) *reason = "no positive definite binary form with the complementary discriminant";
            return false;
        }
        return true;
    }
    return genus_exists(2, 20 - r, d, reason);
}

bool lambda_primitive(const ExtLattice& n) {
    const std::size_t k = n.extra();
    const std::size_t r = n.rank();
    if (k == 0) return true;
    ZMat e(r, k);
    mpz_class den = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) den = lcm(den, n.basis(i, kBaseGenerators + j).get_den());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            mpq_class v = n.basis(i, kBaseGenerators + j) * den;
            e(i, j) = v.get_num();
        }
    ZMat ker = left_kernel(e);
    QMat sub = convert<mpq_class>(ker) * n.basis;
    QMat g = sub * to_qmat(n.ambient) * sub.transposed();
    mpq_class det = determinant(g);
    return abs(det) == kLambdaDet;
}

std::vector<ExtLattice> finite_index_geometric_extensions(const ExtLattice& n, std::size_t* tried) {
    std::vector<ExtLattice> out;
    // a violation in n persists in every overlattice
    EvenLattice base = n.lattice();
    if (!admissible(base).admissible()) return out;
    DiscriminantForm d = discriminant_form(n.gram);
    for (const auto& k : isotropic_subgroups(d)) {
        if (tried) ++*tried;
        ExtLattice m = n;
        if (k.size() > 1) {
            SpannedLattice s = overlattice(n.gram, d, k);
            m.basis = hnf_rows(s.basis * n.basis);
            m.gram = to_imat(m.basis * to_qmat(m.ambient) * m.basis.transposed());
            if (!lambda_primitive(m)) continue;
        }
        EvenLattice lat = m.lattice();
        if (k.size() > 1 && !admissible(lat).admissible()) continue;
        if (!is_geometric(lat)) continue;
        out.push_back(std::move(m));
    }
    return out;
}

std::string theta_name(int type) { return "Θ" + std::to_string(type); }

std::string StratumRecord::cluster_label() const {
    std::string s;
    for (const auto& c : clusters) {
        if (!s.empty()) s += ",";
        s += theta_name(c.type);
    }
    return s;
}

StratumRecord make_record(const CensusContext& ctx, const ExtLattice& ext, int codim, std::vector<GeneratorSpec> generators,
                          bool full_invariants) {
    StratumRecord rec;
    rec.codim = codim;
    rec.generators = std::move(generators);
    rec.ext = ext;
    rec.lattice = ext.lattice();
    DegreeSlicer slicer(rec.lattice);
    rec.graph = fano_graph(rec.lattice, slicer);
    rec.lines = rec.graph.lines();
    rec.irreducible_conics = rec.graph.conics();
    rec.reducible_conics = rec.graph.reducible_conics;
    rec.det = to_i64(mpz_class(abs(rec.lattice.det())));
    rec.fano_index = fano_index(rec.lattice, rec.graph);
    {
        // index of Λ̃ + Σ Z u_j in N; e_i, h span Λ̃ with index 64
        mpq_class gen_det = determinant(to_qmat(ext.ambient));
        mpq_class idx2 = gen_det / mpq_class(rec.lattice.det());
        mpz_class root = sqrt(idx2.get_num());
        rec.glue_index = to_i64(root) / 64;
    }

    // clusters: vertices outside Λ̃ by their direction in N/Λ̃ ⊗ Q
    std::map<QVec, std::vector<std::size_t>> by_direction;
    std::set<std::string> patterns;
    for (std::size_t i = 0; i < rec.graph.vertices.size(); ++i) {
        QVec amb = ext.ambient_of(rec.graph.vertices[i].coords);
        QVec dir(amb.begin() + static_cast<std::ptrdiff_t>(kBaseGenerators), amb.end());
        auto nz = std::find_if(dir.begin(), dir.end(), [](const mpq_class& x) { return x != 0; });
        if (nz == dir.end()) continue;
        mpq_class lead = *nz;
        for (auto& x : dir) x /= lead;
        by_direction[dir].push_back(i);
        patterns.insert(pattern_of(ext, amb).label());
    }
    for (const auto& [dir, members] : by_direction) {
        Cluster c;
        for (auto i : members) (rec.graph.vertices[i].degree == 1 ? c.lines : c.conics)++;
        QVec amb = ext.ambient_of(rec.graph.vertices[members.front()].coords);
        c.signature = cluster_signature(ctx.ld, ext.ambient, amb);
        c.type = classify_cluster(c.lines > 0, c.signature.delta5);
        rec.clusters.push_back(c);
    }
    std::stable_sort(rec.clusters.begin(), rec.clusters.end(),
                     [](const Cluster& a, const Cluster& b) { return a.type < b.type; });
    rec.patterns.assign(patterns.begin(), patterns.end());

    Canonical cd = canonical_form(rec.graph, true);
    rec.cert_delta = cd.certificate;
    if (!full_invariants) return rec;

    Canonical ca = canonical_form(rec.graph, false);
    rec.cert_abstract = ca.certificate;
    rec.aut_order = ca.order;
    rec.i_delta = delta_index(rec.graph, ca);
    if (rec.fano_index != 0) {
        PolarizedGroup oh = polarized_group(rec.lattice, rec.graph, ca);
        rec.oh_order = oh.order;
        rec.oh_index = oh.lattice_orbit;
        rec.discr_kernel_order = discr_kernel_order(rec.lattice, rec.graph, oh);
    }
    if (rec.lattice.rank() == 20) {
        for (const auto& f : forms_with_discriminant(discriminant_form(rec.lattice.gram).negated()))
            rec.transcendental.push_back(table_form(f));
        std::sort(rec.transcendental.begin(), rec.transcendental.end());
        rec.transcendental.erase(std::unique(rec.transcendental.begin(), rec.transcendental.end()),
                                 rec.transcendental.end());
    }
    return rec;
}

std::vector<StratumRecord> codim1_census(const CensusContext& ctx, CensusStats* stats) {
    std::vector<StratumRecord> out;
    std::map<std::string, std::size_t> seen;
    for (int eps : {1, 2}) {
        for (const auto& cell : sylvester_table(eps, ctx.ks)) {
            if (!cell.survives || cell.parity_or_orbit_excluded) continue;
            auto sets = sets_with_parity(ctx.ks, cell.p, eps);
            for (SubsetMask s1 : orbit_representatives(ctx.gamma, sets)) {
                std::vector<SubsetMask> second{SubsetMask{}};
                if (cell.q > 0) {
                    std::vector<Perm16> stab;
                    for (const auto& g : ctx.gamma.elements)
                        if (image(g, s1) == s1) stab.push_back(g);
                    std::vector<int> pool;
                    for (int i = 0; i < 16; ++i)
                        if (!s1.contains(i)) pool.push_back(i);
                    second = subset_orbit_reps(pool, cell.q, stab);
                }
                for (SubsetMask s2 : second) {
                    Pattern pat{eps, s1, s2};
                    if (stats) ++stats->patterns_tried;
                    auto res = extend_by_pattern(ctx.lambda, pat);
                    if (res.status != ExtensionStatus::accepted) continue;
                    if (stats) ++stats->extensions_built;
                    harvest(ctx, *res.lattice, 1, {GeneratorSpec{pat, {}}}, -1, out, seen, stats);
                }
            }
        }
    }
    finish(ctx, out);
    return out;
}

std::vector<GeneratorClass> generator_classes(const CensusContext& ctx) {
    std::vector<GeneratorClass> out;
    for (const auto& sh : kShapes) {
        std::set<SubsetMask> keys;
        for (SubsetMask s : sets_with_parity(ctx.ks, sh.p, sh.eps)) {
            SubsetMask key = class_key(s, ctx.ks);
            if (!keys.insert(key).second) continue;
            Pattern pat{sh.eps, s, SubsetMask{}};
            auto res = extend_by_pattern(ctx.lambda, pat);
            if (res.status != ExtensionStatus::accepted) continue;
            EvenLattice lat = res.lattice->lattice();
            if (!admissible(lat).admissible() || !is_geometric(lat)) continue;
            out.push_back(GeneratorClass{sh.type, pat, key});
        }
    }
    return out;
}

std::vector<StratumRecord> extension_census(const CensusContext& ctx, const std::vector<StratumRecord>& bases,
                                            const std::vector<GeneratorClass>& classes, CensusStats* stats) {
    const QMat a0inv = lambda_inverse(ctx);
    std::vector<StratumRecord> out;
    std::map<std::string, std::size_t> seen;
    for (std::size_t bi = 0; bi < bases.size(); ++bi) {
        const ExtLattice& base = bases[bi].ext;
        const std::size_t k = base.extra();
        std::vector<QVec> au(k);
        for (std::size_t j = 0; j < k; ++j) {
            au[j] = QVec(kBaseGenerators);
            for (std::size_t i = 0; i < kBaseGenerators; ++i) au[j][i] = base.ambient(i, kBaseGenerators + j);
        }
        // Gram of the components of u_j orthogonal to Λ̃ (negative definite)
        QMat w(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                w(i, j) = base.ambient(kBaseGenerators + i, kBaseGenerators + j) - qform(au[i], a0inv, au[j]);
        QMat pmat = inverse(w);
        mpz_class den = 1;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                pmat(i, j) = -pmat(i, j);
                den = lcm(den, pmat(i, j).get_den());
            }
        IMat qint(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) qint(i, j) = to_i64(pmat(i, j) * den);
        const IMat& g = base.gram;
        QMat ginv = inverse(to_qmat(g));
        DiscriminantForm dbase = discriminant_form(g);
        std::set<std::pair<IVec, mpq_class>> keys;

        for (const auto& cls : classes) {
            const QVec aw = pattern_functional(cls.pattern);
            const mpq_class c = -2 - qform(aw, a0inv, aw);
            if (c >= 0) continue;
            QVec shift(k);
            for (std::size_t j = 0; j < k; ++j) shift[j] = -qform(aw, a0inv, au[j]);
            const mpq_class bound = -c * den;
            enumerate_ellipsoid(qint, shift, bound, [&](const IVec& t) {
                mpq_class val = 0;
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) val += (t[i] + shift[i]) * pmat(i, j) * (t[j] + shift[j]);
                if (val >= -c) return true;  // boundary is degenerate
                if (stats) ++stats->patterns_tried;
                auto res = extend(base, cls.pattern, t);
                if (res.status != ExtensionStatus::accepted) return true;
                if (stats) ++stats->extensions_built;
                const ExtLattice& m = *res.lattice;
                // w ↦ (residue of its functional on the base, norm of its component ⟂ base)
                const std::size_t r = base.rank();
                QVec f(r);
                for (std::size_t i = 0; i < r; ++i) f[i] = m.gram(r, i);
                QVec x = mul(f, ginv);
                mpq_class orth = m.gram(r, r);
                for (std::size_t i = 0; i < r; ++i) orth -= x[i] * f[i];
                IVec res1 = dbase.from_dual(x, g);
                IVec res2 = dbase.scale(res1, -1);
                if (!keys.insert({std::min(res1, res2), orth}).second) return true;
                if (stats) ++stats->distinct_candidates;
                auto gens = bases[bi].generators;
                gens.push_back(GeneratorSpec{cls.pattern, t});
                harvest(ctx, m, bases[bi].codim + 1, gens, static_cast<int>(bi), out, seen, stats);
                return true;
            });
        }
    }
    finish(ctx, out);
    return out;
}

std::vector<StratumRecord> codim2_census(const CensusContext& ctx, const std::vector<StratumRecord>& codim1,
                                         CensusStats* stats) {
    return extension_census(ctx, codim1, generator_classes(ctx), stats);
}

std::vector<StratumRecord> codim3_census(const CensusContext& ctx, const std::vector<StratumRecord>& codim2,
                                         CensusStats* stats) {
    return extension_census(ctx, codim2, generator_classes(ctx), stats);
}

std::vector<PairOrbit> pair_orbits(const CensusContext& ctx, const std::vector<GeneratorClass>& classes,
                                   bool disjoint_only) {
    const QMat a0inv = lambda_inverse(ctx);
    std::map<std::pair<int, SubsetMask>, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index[{classes[i].type, classes[i].key}] = i;

    using Triple = std::tuple<std::size_t, std::size_t, i64>;
    // triple -> orthogonal product -> witness
    std::map<Triple, std::map<mpq_class, std::pair<Pattern, Pattern>>> triples;
    auto members = [&](const GeneratorClass& g) {
        std::vector<Pattern> pats;
        for (SubsetMask s : eq_classes(g.pattern.supp1, ctx.ks).cl_n(g.pattern.p()))
            pats.push_back(Pattern{g.pattern.eps, s, SubsetMask{}});
        return pats;
    };
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i; j < classes.size(); ++j) {
            const auto& gu = classes[i];
            const auto& gv = classes[j];
            const i64 tmax = disjoint_only ? 0 : (gu.pattern.eps == 2 && gv.pattern.eps == 2) ? 2 : 1;
            for (const auto& pu : members(gu))
                for (const auto& pv : members(gv)) {
                    QVec au = pattern_functional(pu), av = pattern_functional(pv);
                    mpq_class cu = -2 - qform(au, a0inv, au);
                    mpq_class cv = -2 - qform(av, a0inv, av);
                    mpq_class uv = qform(au, a0inv, av);
                    for (i64 t = 0; t <= tmax; ++t) {
                        mpq_class s = t - uv;
                        if (s * s >= cu * cv) continue;
                        triples[Triple{i, j, t}].emplace(s, std::make_pair(pu, pv));
                    }
                }
        }

    // union-find over the Γ action on classes
    std::vector<Triple> keys;
    for (const auto& kv : triples) keys.push_back(kv.first);
    std::map<Triple, std::size_t> pos;
    for (std::size_t i = 0; i < keys.size(); ++i) pos[keys[i]] = i;
    std::vector<std::size_t> parent(keys.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto move = [&](const Perm16& g, std::size_t ci) {
        const auto& cls = classes[ci];
        SubsetMask key = class_key(image(g, cls.pattern.supp1), ctx.ks);
        auto it = index.find({cls.type, key});
        if (it == index.end()) throw std::logic_error("Γ does not preserve the generator classes");
        return it->second;
    };
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto& [a, b, t] = keys[i];
        for (const auto& g : ctx.gamma.generators) {
            std::size_t ga = move(g, a), gb = move(g, b);
            if (ga > gb) std::swap(ga, gb);
            auto it = pos.find(Triple{ga, gb, t});
            if (it == pos.end()) throw std::logic_error("Γ image of a feasible triple is infeasible");
            std::size_t x = find(i), y = find(it->second);
            if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
    }

    // Λ̃⟨u, v⟩ depends on the classes and the orthogonal product only
    std::map<std::tuple<std::size_t, std::size_t, mpq_class>, std::vector<ExtLattice>> built;
    std::vector<PairOrbit> out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (find(i) != i) continue;
        const auto& [a, b, t] = keys[i];
        PairOrbit po;
        po.u = classes[a];
        po.v = classes[b];
        po.product = t;
        for (const auto& [s, w] : triples.at(keys[i])) {
            po.orthogonal_products.push_back(s);
            po.witnesses.push_back(w);
            auto key = std::make_tuple(a, b, s);
            auto it = built.find(key);
            if (it == built.end()) {
                std::vector<ExtLattice> exts;
                auto r1 = extend_by_pattern(ctx.lambda, w.first);
                if (r1.status == ExtensionStatus::accepted) {
                    auto r2 = extend(*r1.lattice, w.second, {t});
                    if (r2.status == ExtensionStatus::accepted) exts = finite_index_geometric_extensions(*r2.lattice);
                }
                it = built.emplace(key, std::move(exts)).first;
            }
            po.lattices.insert(po.lattices.end(), it->second.begin(), it->second.end());
        }
        po.geometric = !po.lattices.empty();
        out.push_back(std::move(po));
    }
    return out;
}

BoundsReport bounds_report(const std::vector<const StratumRecord*>& records) {
    BoundsReport b;
    for (const auto* r : records) {
        const std::size_t conics = r->irreducible_conics + r->reducible_conics;
        b.max_lines = std::max(b.max_lines, r->lines);
        b.max_reducible = std::max(b.max_reducible, r->reducible_conics);
        b.max_conics = std::max(b.max_conics, conics);
        if (conics > 128) {
            if (r->lattice.rank() != 20) b.many_conics_rank20 = false;
            if (r->lines != 0) b.many_conics_no_lines = false;
        }
        if (r->irreducible_conics > 104 && r->lines != 0) b.many_irreducible_no_lines = false;
    }
    return b;
}

}  // namespace octic
