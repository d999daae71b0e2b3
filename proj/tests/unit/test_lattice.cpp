#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "octic/discriminant.hpp"
#include "octic/enumeration.hpp"
#include "octic/lattice.hpp"

using namespace octic;

namespace {

IMat e8_negative() {
    // Bourbaki labelling, branch at node 3.
    IMat g(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = -2;
    const int edges[][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
    return g;
}

IMat hyperbolic_plane() {
    IMat u(2, 2);
    u(0, 1) = u(1, 0) = 1;
    return u;
}

IMat direct_sum(const IMat& a, const IMat& b) {
    IMat s(a.rows() + b.rows(), a.rows() + b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) s(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) s(a.rows() + i, a.rows() + j) = b(i, j);
    return s;
}

IMat diagonal(std::initializer_list<i64> d) {
    IMat g(d.size(), d.size());
    std::size_t i = 0;
    for (i64 x : d) g(i, i) = x, ++i;
    return g;
}

}  // namespace

TEST_CASE("E8: unimodular, 240 roots, 2160 vectors of norm -4") {
    IMat g = e8_negative();
    CHECK(abs(make_lattice(g).det()) == 1);
    CHECK(short_vectors(g, -2).size() == 240);
    CHECK(short_vectors(g, -4).size() == 2160);
    CHECK(discriminant_form(g).trivial());
}

TEST_CASE("discriminant forms of small lattices") {
    SUBCASE("A1: Z/2 with q = -1/2") {
        auto d = discriminant_form(diagonal({-2}));
        REQUIRE(d.orders == std::vector<i64>{2});
        CHECK(d.q_value(IVec{1}) == mpq_class(3, 2));
    }
    SUBCASE("[8]: Z/8 with q = 1/8") {
        auto d = discriminant_form(diagonal({8}));
        REQUIRE(d.orders == std::vector<i64>{8});
        CHECK(d.q_value(IVec{1}) == mpq_class(1, 8));
        CHECK(gauss_signature(d) == 1);
    }
    SUBCASE("U(2): q vanishes on the generators, q(e/2 + f/2) = 1") {
        IMat u = hyperbolic_plane();
        u(0, 1) = u(1, 0) = 2;
        auto d = discriminant_form(u);
        CHECK(d.size() == 4);
        std::multiset<mpq_class> values;
        for (std::size_t i = 0; i < d.size(); ++i) values.insert(d.q_value(d.element(i)));
        CHECK(values == std::multiset<mpq_class>{0, 0, 0, 1});
    }
}

TEST_CASE("property: Milgram congruence on random even lattices") {
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = testing::uniform(1, 5);
        IMat g = testing::random_definite_even(n);
        int extra_u = testing::uniform(0, 1);
        if (extra_u) g = direct_sum(g, hyperbolic_plane());
        if (testing::uniform(0, 1)) g = direct_sum(g, diagonal({2 * testing::uniform(1, 6)}));
        Signature s = signature(g);
        auto d = discriminant_form(g);
        INFO(to_string(g));
        CHECK(gauss_signature(d) == ((s.positive - s.negative) % 8 + 8) % 8);
    }
}

TEST_CASE("property: overlattices correspond to isotropic subgroups") {
    std::size_t checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        IMat g = direct_sum(testing::random_definite_even(testing::uniform(1, 3)), diagonal({-2, -2}));
        g = direct_sum(g, hyperbolic_plane());
        g(g.rows() - 1, g.rows() - 2) = g(g.rows() - 2, g.rows() - 1) = 2;  // U(2)
        auto d = discriminant_form(g);
        mpz_class det = abs(make_lattice(g).det());
        for (const Subgroup& k : isotropic_subgroups(d)) {
            SpannedLattice m = overlattice(g, d, k);
            // index |K|
            mpz_class det_m = abs(make_lattice(m.gram).det());
            CHECK(det_m * k.size() * k.size() == det);
            // back to the subgroup: residues of the new basis vectors
            std::vector<IVec> residues;
            for (std::size_t r = 0; r < m.basis.rows(); ++r) residues.push_back(d.from_dual(m.basis.row(r), g));
            Subgroup back = subgroup_generated(d, residues);
            CHECK(back.elements == k.elements);
            ++checked;
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("short vectors agree with the box oracle on the root systems") {
    for (std::size_t n = 1; n <= 6; ++n) {
        IMat a(n, n);
        for (std::size_t i = 0; i < n; ++i) a(i, i) = -2;
        for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1;
        CHECK(short_vectors(a, -2).size() == n * (n + 1));  // roots of A_n
        CHECK(short_vectors(a, -2) == short_vectors_naive(a, -2, 2));
    }
}
