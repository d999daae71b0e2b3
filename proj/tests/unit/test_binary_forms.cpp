#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "octic/binary_forms.hpp"
#include "octic/discriminant.hpp"

using namespace octic;

namespace {

BinaryForm transformed(const BinaryForm& f, const IMat& m) {
    IMat g = testing::congruent(f.gram(), m);
    return BinaryForm{g(0, 0), g(0, 1), g(1, 1)};
}

IMat random_sl2() { return testing::random_unimodular(2, static_cast<int>(testing::uniform(1, 8)), 3); }

// Oracle: minimum of f over nonzero vectors in a box, and its multiplicity.
std::pair<i64, int> minimum(const BinaryForm& f, i64 r) {
    i64 best = -1;
    int count = 0;
    for (i64 x = -r; x <= r; ++x)
        for (i64 y = -r; y <= r; ++y) {
            if (!x && !y) continue;
            i64 v = f.a * x * x + 2 * f.b * x * y + f.c * y * y;
            if (best < 0 || v < best) best = v, count = 0;
            if (v == best) ++count;
        }
    return {best, count};
}

}  // namespace

TEST_CASE("gauss reduction examples") {
    CHECK(gauss_reduce({8, 4, 12}) == BinaryForm{8, 4, 12});
    CHECK(gauss_reduce({12, -4, 8}) == BinaryForm{8, 4, 12});
    CHECK(gauss_reduce({4, 0, 24}) == BinaryForm{4, 0, 24});
    CHECK(BinaryForm{8, 4, 12}.str() == "[8,4,12]");
}

TEST_CASE("even forms of small determinant") {
    CHECK(enumerate_even_forms(4) == std::vector<BinaryForm>{{2, 0, 2}});
    auto f80 = enumerate_even_forms(80);
    CHECK(std::find(f80.begin(), f80.end(), BinaryForm{8, 4, 12}) != f80.end());
    auto f96 = enumerate_even_forms(96);
    CHECK(std::find(f96.begin(), f96.end(), BinaryForm{4, 0, 24}) != f96.end());
}

TEST_CASE("automorphism group orders") {
    CHECK(automorphisms({2, 0, 4}).size() == 4);
    CHECK(automorphisms({2, 0, 2}).size() == 8);
    CHECK(automorphisms({2, 1, 2}).size() == 12);
    CHECK(rotations({2, 1, 2}).size() == 6);
    for (const auto& m : automorphisms({2, 1, 2})) CHECK(testing::congruent(BinaryForm{2, 1, 2}.gram(), m) == BinaryForm{2, 1, 2}.gram());
}

TEST_CASE("property: reduction is idempotent and invariant on 1000 random forms") {
    for (int trial = 0; trial < 1000; ++trial) {
        BinaryForm f = testing::random_definite_form(40);
        BinaryForm r = gauss_reduce(f);
        INFO(f.str() << " -> " << r.str());
        CHECK(is_reduced(r));
        CHECK(gauss_reduce(r) == r);
        CHECK(r.det() == f.det());
        CHECK(gauss_reduce(transformed(f, random_sl2())) == r);
        // the first coefficient of a reduced form is the minimum
        CHECK(minimum(f, 12).first == r.a);
        IMat t;
        BinaryForm via = gauss_reduce(f, &t);
        CHECK(transformed(f, t) == via);
    }
}

TEST_CASE("property: enumerated forms are reduced, even, distinct, with the right determinant") {
    for (i64 det = 3; det <= 200; ++det) {
        auto forms = enumerate_even_forms(det);
        std::set<BinaryForm> seen;
        for (const auto& f : forms) {
            CHECK(f.det() == det);
            CHECK(f.even());
            CHECK(is_reduced(f));
            CHECK(seen.insert(gauss_reduce(f)).second);
        }
        // genera: forms in one genus have isomorphic discriminant forms
        for (const auto& genus : genera(det))
            for (const auto& f : genus) CHECK(is_isomorphic(discriminant_form(f.gram()), discriminant_form(genus.front().gram())));
    }
}

TEST_CASE("forms with a prescribed discriminant form") {
    auto d = discriminant_form(BinaryForm{8, 4, 12}.gram());
    auto forms = forms_with_discriminant(d);
    CHECK(std::find(forms.begin(), forms.end(), BinaryForm{8, 4, 12}) != forms.end());
    for (const auto& f : forms) CHECK(is_isomorphic(discriminant_form(f.gram()), d));
}
