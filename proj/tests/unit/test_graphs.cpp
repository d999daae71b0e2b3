#include <doctest.h>

#include "generators.hpp"
#include "octic/graphs.hpp"
#include "octic/perm.hpp"

using namespace octic;

namespace {

ColoredGraph petersen() {
    ColoredGraph g;
    g.color.assign(10, 0);
    g.edge = IMat(10, 10);
    auto link = [&](int a, int b) { g.edge(a, b) = g.edge(b, a) = 1; };
    for (int i = 0; i < 5; ++i) {
        link(i, (i + 1) % 5);
        link(5 + i, 5 + (i + 2) % 5);
        link(i, 5 + i);
    }
    return g;
}

ColoredGraph cycle(int n) {
    ColoredGraph g;
    g.color.assign(n, 0);
    g.edge = IMat(n, n);
    for (int i = 0; i < n; ++i) g.edge(i, (i + 1) % n) = g.edge((i + 1) % n, i) = 1;
    return g;
}

ColoredGraph random_graph(int n, int labels) {
    ColoredGraph g;
    g.color.resize(n);
    for (auto& c : g.color) c = testing::uniform(0, 1);
    g.edge = IMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edge(i, j) = g.edge(j, i) = testing::uniform(0, labels);
    return g;
}

Perm cyc(std::size_t n, std::initializer_list<int> c) {
    Perm p = perm_identity(n);
    std::vector<int> v(c);
    for (std::size_t i = 0; i < v.size(); ++i) p[v[i]] = v[(i + 1) % v.size()];
    return p;
}

}  // namespace

TEST_CASE("schreier-sims orders") {
    CHECK(SchreierSims(6, {cyc(6, {0, 1}), cyc(6, {0, 1, 2, 3, 4, 5})}).order64() == 720);
    CHECK(SchreierSims(6, {cyc(6, {0, 1, 2}), cyc(6, {1, 2, 3}), cyc(6, {2, 3, 4}), cyc(6, {3, 4, 5})}).order64() == 360);
    CHECK(SchreierSims(8, {cyc(8, {0, 1, 2, 3, 4, 5, 6, 7}), cyc(8, {0, 1})}).order64() == 40320);
    SchreierSims d8(8, {cyc(8, {0, 1, 2, 3, 4, 5, 6, 7})});
    d8.add(Perm{0, 7, 6, 5, 4, 3, 2, 1});
    CHECK(d8.order64() == 16);
    CHECK(d8.elements().size() == 16);
}

TEST_CASE("automorphism groups of small graphs") {
    CHECK(canonical_form(petersen()).order == 120);
    CHECK(canonical_form(cycle(7)).order == 14);
    auto c = canonical_form(petersen());
    for (const auto& g : c.generators) CHECK(is_automorphism(petersen(), g));
}

TEST_CASE("property: certificates are invariant under relabeling") {
    for (int trial = 0; trial < 60; ++trial) {
        ColoredGraph g = random_graph(testing::uniform(3, 14), testing::uniform(1, 2));
        Canonical cg = canonical_form(g);
        for (int k = 0; k < 5; ++k) {
            ColoredGraph h = relabeled(g, testing::random_perm(g.size()));
            Canonical ch = canonical_form(h);
            CHECK(ch.certificate == cg.certificate);
            CHECK(ch.order == cg.order);
            auto iso = isomorphism(g, h);
            REQUIRE(iso);
            CHECK(relabeled(g, *iso).edge == h.edge);
        }
    }
}

TEST_CASE("non-isomorphic graphs get different certificates") {
    ColoredGraph c6 = cycle(6);
    ColoredGraph two_triangles = cycle(6);
    two_triangles.edge(2, 3) = two_triangles.edge(3, 2) = 0;
    two_triangles.edge(5, 0) = two_triangles.edge(0, 5) = 0;
    two_triangles.edge(0, 2) = two_triangles.edge(2, 0) = 1;
    two_triangles.edge(3, 5) = two_triangles.edge(5, 3) = 1;
    CHECK(canonical_form(c6).certificate != canonical_form(two_triangles).certificate);
    CHECK_FALSE(isomorphism(c6, two_triangles));
}
