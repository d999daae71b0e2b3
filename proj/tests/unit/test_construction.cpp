#include <doctest.h>

#include <set>

#include "octic/construction.hpp"
#include "octic/discriminant.hpp"
#include "octic/enumeration.hpp"
#include "octic/graphs.hpp"

using namespace octic;

namespace {

struct Fixture {
    KummerStructure ks = build_kummer_structure(build_golay());
    ExtLattice lambda = build_lambda_tilde(ks);
    EvenLattice lattice = lambda.lattice();
};

const Fixture& fx() {
    static const Fixture f;
    return f;
}

}  // namespace

TEST_CASE("Λ̃: rank, signature, determinant") {
    const auto& l = fx().lattice;
    CHECK(l.rank() == 17);
    CHECK(l.signature() == Signature{1, 16, 0});
    CHECK(abs(l.det()) == 640);
    CHECK(l.delta.size() == 16);
    CHECK(l.norm(*l.h) == 8);
}

TEST_CASE("Λ̃: discriminant form") {
    auto d = discriminant_form(fx().lattice);
    CHECK(d.size() == 640);
    auto d2 = d.p_part(2);
    auto d5 = d.p_part(5);
    CHECK(d2.size() == 128);
    CHECK(d5.size() == 5);
    // 2-part u ⊕ u ⊕ [5/8]: an element of order 8 with q = 5/8 up to squares
    std::multiset<mpq_class> q8;
    for (std::size_t i = 0; i < d2.size(); ++i) {
        IVec a = d2.element(i);
        if (d2.order_of(a) == 8) q8.insert(d2.q_value(a));
    }
    CHECK(q8.count(mpq_class(5, 8)) > 0);
    CHECK(q8.count(mpq_class(1, 8)) == 0);
    // 5-part [8/5]: q values of the nonzero elements
    std::multiset<mpq_class> q5;
    for (std::size_t i = 1; i < d5.size(); ++i) q5.insert(d5.q_value(d5.element(i)));
    CHECK(q5 == std::multiset<mpq_class>{mpq_class(2, 5), mpq_class(2, 5), mpq_class(8, 5), mpq_class(8, 5)});
    CHECK(gauss_signature(d) == 1);
}

TEST_CASE("θ has square 40") {
    QVec th = theta_vector(fx().lambda.dim());
    CHECK(bilinear(th, fx().lambda.ambient, th) == 40);
}

TEST_CASE("generic Fano graph: 32 conics, index 4") {
    FanoGraph g = fano_graph(fx().lattice);
    CHECK(g.lines() == 0);
    CHECK(g.conics() == 32);
    CHECK(g.reducible_conics == 0);
    CHECK(g.kummer.size() == 16);
    CHECK(fano_index(fx().lattice, g) == 4);
    // Kummer conics are pairwise disjoint, and so are the others
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = 0; j < g.vertices.size(); ++j) {
            bool same_family = (g.vertices[i].kummer_index < 0) == (g.vertices[j].kummer_index < 0);
            if (i != j && same_family) CHECK(g.adjacency(i, j) == 0);
        }
    CHECK(is_triquadric(fx().lattice));
}

TEST_CASE("BB-conics: 16 vectors of pattern c12-3") {
    auto bb = bb_conics(fx().ks);
    CHECK(bb.size() == 16);
    for (const auto& c : bb) {
        CHECK(c.pattern.label() == "c12-3");
        CHECK(bilinear(c.vector, fx().lambda.ambient, c.vector) == -2);
    }
}

TEST_CASE("3-isotropic vectors: surviving supports fail parity") {
    std::set<int> supports;
    for (const auto& c : sylvester_table(3, fx().ks, 0, true)) {
        if (!c.survives) continue;
        supports.insert(c.p);
        CHECK(c.parity_or_orbit_excluded);
    }
    CHECK(supports == std::set<int>{0, 14, 16});
}

TEST_CASE("projected norm formula") {
    // l4-0: -2 + 25/40
    CHECK(projected_norm(4, 0, 1) == mpq_class(-11, 8));
    CHECK(projected_norm(0, 0, 2) == mpq_class(1, 10));
    CHECK(parse_pattern("c12-3") == PatternShape{2, 12, 3});
}

TEST_CASE("extensions: q > 0 patterns and the l8 patterns are rejected or not admissible") {
    const auto& ks = fx().ks;
    std::size_t built = 0, admissible_count = 0;
    for (SubsetMask s : ks.C(8)) {
        if (parity(s, ks) != Parity::odd) continue;
        auto res = extend_by_pattern(fx().lambda, Pattern{1, s, SubsetMask{}});
        if (!res.lattice) continue;
        ++built;
        if (admissible(res.lattice->lattice()).admissible()) ++admissible_count;
        if (built >= 24) break;
    }
    CHECK(built > 0);
    CHECK(admissible_count == 0);
}
