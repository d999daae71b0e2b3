#include <doctest.h>

#include <map>
#include <set>

#include "generators.hpp"
#include "octic/kummer.hpp"

using namespace octic;

namespace {

struct Fixture {
    GolayCode code = build_golay();
    KummerStructure ks = build_kummer_structure(code);
    PermGroup gamma = stabilizer_gamma(ks);
};

const Fixture& fx() {
    static const Fixture f;
    return f;
}

}  // namespace

TEST_CASE("golay code: size, minimum weight, weight distribution") {
    const auto& code = fx().code;
    CHECK(code.codewords.size() == 4096);
    CHECK(golay_min_weight(code) == 8);
    std::map<int, int> weights;
    for (auto w : code.codewords) ++weights[std::popcount(w)];
    CHECK(weights == std::map<int, int>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
}

TEST_CASE("kummer structure sizes") {
    const auto& ks = fx().ks;
    CHECK(ks.octads.size() == 30);
    CHECK(ks.kummer.size() == 32);
    CHECK(ks.even_sets.size() == 2048);
    CHECK(ks.kummer8.size() == 32);
    CHECK(fx().gamma.order() == 9216);
}

TEST_CASE("orbit table cells") {
    const std::map<std::pair<int, std::string>, std::string> expected{
        {{0, "O"}, "1x1"},        {{4, "even"}, "18x4"},  {{4, "odd"}, "16x4"},         {{4, "K"}, "1x4"},
        {{6, "even"}, "12x16"},   {{6, "odd"}, "16x16"},  {{8, "even"}, "18x(8+16)"},   {{8, "odd"}, "16x24"},
        {{8, "O"}, "1x(6+24)"},   {{8, "K"}, "1x24"},     {{10, "even"}, "12x16"},      {{10, "odd"}, "16x16"},
        {{12, "even"}, "18x4"},   {{12, "odd"}, "16x4"},  {{12, "K"}, "1x4"},           {{16, "O"}, "1x1"},
    };
    std::map<std::pair<int, std::string>, std::string> got;
    std::map<std::pair<int, std::string>, int> orbits;
    for (const auto& c : gamma_orbits(fx().gamma, fx().ks)) {
        got[{c.n, to_string(c.kind)}] = c.label();
        orbits[{c.n, to_string(c.kind)}] = c.orbits;
    }
    CHECK(got == expected);
    for (const auto& [cell, k] : orbits) {
        INFO("n=" << cell.first << " " << cell.second);
        bool two = (cell.first == 8 && (cell.second == "even" || cell.second == "O"));
        CHECK(k == (two ? 2 : 1));
    }
}

TEST_CASE("property: Γ preserves parity, kinds and ≈-classes") {
    const auto& ks = fx().ks;
    const auto& g = fx().gamma.elements;
    for (int trial = 0; trial < 500; ++trial) {
        SubsetMask s = ks.even_sets[testing::uniform(0, ks.even_sets.size() - 1)];
        const Perm16& p = g[testing::uniform(0, g.size() - 1)];
        SubsetMask t = image(p, s);
        REQUIRE(ks.in_C(t));
        CHECK(parity(t, ks) == parity(s, ks));
        CHECK(set_kind(t, ks) == set_kind(s, ks));
        CHECK(class_key(t, ks) == class_key(image(p, class_key(s, ks)), ks));
    }
}

TEST_CASE("property: ≈-classes are cosets of O_*") {
    const auto& ks = fx().ks;
    for (int trial = 0; trial < 200; ++trial) {
        SubsetMask s = ks.even_sets[testing::uniform(0, ks.even_sets.size() - 1)];
        SubsetMask o = ks.kummer[testing::uniform(0, ks.kummer.size() - 1)];
        CHECK(class_key(s ^ o, ks) == class_key(s, ks));
        auto cls = eq_classes(s, ks).cl;
        CHECK(cls.size() == 32);
    }
}
