#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "octic/enumeration.hpp"
#include "octic/linalg.hpp"

using namespace octic;

namespace {

// Box radius from the exact inverse: |x_i|^2 <= n (Q^-1)_ii for xQx <= n.
i64 box_radius(const IMat& negative, i64 norm) {
    IMat q = negative;
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) q(i, j) = -q(i, j);
    QMat inv = inverse(to_qmat(q));
    i64 r = 0;
    for (std::size_t i = 0; i < q.rows(); ++i) {
        mpq_class b = inv(i, i) * std::abs(norm);
        r = std::max<i64>(r, static_cast<i64>(std::floor(std::sqrt(b.get_d()) + 1e-9)));
    }
    return r;
}

EvenLattice polarized(const IMat& g) {
    EvenLattice l = make_lattice(g);
    IVec h(g.rows(), 0);
    h[0] = 1;
    l.h = h;
    return l;
}

}  // namespace

TEST_CASE("property: short vectors equal the box oracle on 100 random definite lattices") {
    int tested = 0;
    while (tested < 100) {
        std::size_t n = testing::uniform(1, 6);
        IMat g = testing::random_definite_even(n);
        i64 norm = -2 * testing::uniform(1, 3);
        i64 r = box_radius(g, norm);
        if (std::pow(2.0 * r + 1, static_cast<double>(n)) > 2e6) continue;
        INFO("gram " << to_string(g) << " norm " << norm);
        CHECK(short_vectors(g, norm) == short_vectors_naive(g, norm, r));
        ++tested;
    }
}

TEST_CASE("property: coset vectors of random shifts match the box oracle") {
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = testing::uniform(1, 4);
        IMat g = testing::random_definite_even(n);
        QVec shift(n);
        for (auto& x : shift) {
            x = mpq_class(testing::uniform(0, 3), 4);
            x.canonicalize();
        }
        mpq_class target(-testing::uniform(1, 16), 4);
        target.canonicalize();
        auto got = coset_vectors(CosetQuery{g, shift, target});
        // |target| <= 4 and 0 <= shift < 1
        i64 r = box_radius(g, -4) + 1;
        std::vector<IVec> want;
        IVec w(n, -r);
        while (true) {
            QVec v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = w[i] + shift[i];
            if (bilinear(v, g, v) == target) want.push_back(w);
            std::size_t k = 0;
            while (k < n && w[k] == r) w[k++] = -r;
            if (k == n) break;
            ++w[k];
        }
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("fano graph of tiny polarized lattices") {
    SUBCASE("h only") {
        IMat g(1, 1);
        g(0, 0) = 8;
        FanoGraph f = fano_graph(polarized(g));
        CHECK(f.lines() == 0);
        CHECK(f.conics() == 0);
        CHECK(depth(polarized(g)) == 8);
    }
    SUBCASE("one line") {
        IMat g(2, 2);
        g(0, 0) = 8;
        g(0, 1) = g(1, 0) = 1;
        g(1, 1) = -2;
        FanoGraph f = fano_graph(polarized(g));
        CHECK(f.lines() == 1);
        CHECK(f.conics() == 0);
        CHECK(depth(polarized(g)) == 1);
    }
    SUBCASE("one conic") {
        IMat g(2, 2);
        g(0, 0) = 8;
        g(0, 1) = g(1, 0) = 2;
        g(1, 1) = -2;
        FanoGraph f = fano_graph(polarized(g));
        CHECK(f.lines() == 0);
        CHECK(f.conics() == 1);
        CHECK(depth(polarized(g)) == 2);
    }
}

TEST_CASE("non-hyperbolic input is rejected") {
    IMat g(2, 2);
    g(0, 0) = 8;
    g(1, 1) = 2;
    CHECK_THROWS_AS(fano_graph(polarized(g)), std::invalid_argument);
}
