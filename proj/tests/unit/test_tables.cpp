#include <doctest.h>

#include <set>

#include "octic/tables.hpp"

using namespace octic;

TEST_CASE("reference tables have the published row counts") {
    CHECK(reference_rows(1).size() == 6);
    CHECK(reference_rows(2).size() == 16);
    auto t3 = reference_rows(3);
    CHECK(t3.size() == 41);
    std::size_t big = 0;
    for (const auto& r : t3) big += r.table == "3";
    CHECK(big == 16);
    CHECK_THROWS(reference_rows(4));
}

TEST_CASE("reference rows are internally consistent") {
    for (int k = 1; k <= 3; ++k)
        for (const auto& r : reference_rows(k)) {
            INFO(to_csv(r));
            CHECK(r.kernel_order > 0);
            CHECK(r.det > 0);
            if (k == 3) {
                CHECK_FALSE(r.t_forms.empty());
                CHECK((r.table == "3") == (r.reducible + r.irreducible > 80));
            }
            // clusters: the lines come from Θ1 (4 each), Θ2 (20 each)
            if (k >= 2) {
                std::size_t lines = 0;
                for (std::size_t p = r.clusters.find("Θ"); p != std::string::npos; p = r.clusters.find("Θ", p + 1)) {
                    char t = r.clusters[p + std::string("Θ").size()];
                    lines += t == '1' ? 4 : t == '2' ? 20 : 0;
                }
                CHECK(lines == r.lines);
            }
        }
}

TEST_CASE("multiset comparison") {
    auto ref = reference_rows(2);
    auto same = ref;
    std::reverse(same.begin(), same.end());
    CHECK(compare_rows(ref, same).ok());
    auto dropped = ref;
    dropped.pop_back();
    auto d = compare_rows(ref, dropped);
    CHECK(d.missing.size() == 1);
    CHECK(d.extra.empty());
    auto changed = ref;
    changed[3].i_delta += 1;
    d = compare_rows(ref, changed);
    CHECK(d.missing.size() == 1);
    CHECK(d.extra.size() == 1);
    // duplicated rows must be matched once each
    auto doubled = ref;
    doubled.push_back(ref[3]);
    d = compare_rows(ref, doubled);
    CHECK(d.extra.size() == 1);
}

TEST_CASE("csv quoting") {
    TableRow r = reference_rows(2).front();
    std::string line = to_csv(r);
    CHECK(line.rfind("2,\"Θ1,Θ1\",", 0) == 0);
    std::string header = csv_header();
    CHECK(std::count(header.begin(), header.end(), ',') == 14);
}
