#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "equifix/su2.hpp"
#include "support/oracles.hpp"

using namespace equifix;

TEST_CASE("irreducible restriction weights") {
    CHECK(irrep_weights(1) == std::vector<long>{0});
    CHECK(irrep_weights(2) == std::vector<long>{1, -1});
    CHECK(irrep_weights(3) == std::vector<long>{2, 0, -2});
    CHECK(irrep_weights(4) == std::vector<long>{3, 1, -1, -3});
    CHECK_THROWS_AS(irrep_weights(0), std::domain_error);
}

TEST_CASE("weights agree with the character recursion") {
    for (long d = 1; d <= 12; ++d) {
        auto w = irrep_weights(d);
        std::multiset<long> got(w.begin(), w.end());
        CHECK(got == oracles::su2_weights_from_character(d));
    }
}

TEST_CASE("weight lists are symmetric and sum to zero") {
    for (long d = 1; d <= 20; ++d) {
        auto w = irrep_weights(d);
        CHECK(static_cast<long>(w.size()) == d);
        CHECK(std::accumulate(w.begin(), w.end(), 0L) == 0);
        std::multiset<long> pos(w.begin(), w.end());
        std::multiset<long> neg;
        for (long x : w)
            neg.insert(-x);
        CHECK(pos == neg);
    }
}

TEST_CASE("isolated tangent sets in low dimension") {
    auto s2 = enumerate_isolated_tangent_sets(2);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].m == std::vector<long>{1, 1});
    CHECK(s2[0].eps == -1);

    CHECK(enumerate_isolated_tangent_sets(3).empty());

    auto s4 = enumerate_isolated_tangent_sets(4);
    REQUIRE(s4.size() == 2);
    CHECK(s4[0].m == std::vector<long>{1, 1, 1, 1});
    CHECK(s4[0].eps == 1);
    CHECK(s4[1].m == std::vector<long>{1, 1, 3, 3});
    CHECK(s4[1].eps == 1);

    auto s6 = enumerate_isolated_tangent_sets(6);
    REQUIRE(s6.size() == 3);
    CHECK(s6[0].m == std::vector<long>{1, 1, 1, 1, 1, 1});
    CHECK(s6[1].m == std::vector<long>{1, 1, 1, 1, 3, 3});
    CHECK(s6[2].m == std::vector<long>{1, 1, 3, 3, 5, 5});
}

TEST_CASE("no isolated tangent set exists in odd dimension") {
    for (long n = 1; n <= 11; n += 2)
        CHECK(enumerate_isolated_tangent_sets(n).empty());
}

TEST_CASE("tangent set count equals partitions into even parts") {
    for (long n = 1; n <= 12; ++n) {
        auto sets = enumerate_isolated_tangent_sets(n);
        CHECK(static_cast<long>(sets.size()) == oracles::count_partitions_even_parts(n));
        // each set: n ascending odd positive weights in equal pairs
        for (const auto& w : sets) {
            CHECK(static_cast<long>(w.m.size()) == n);
            CHECK(std::is_sorted(w.m.begin(), w.m.end()));
            for (long x : w.m) {
                CHECK(x >= 1);
                CHECK(x % 2 == 1);
            }
        }
        CHECK(std::is_sorted(sets.begin(), sets.end()));
    }
}

TEST_CASE("orientation sign is forced by the weight multiset") {
    // The sign is the parity of the signed-weight product; flipping all
    // signs of a 2j-dimensional irreducible block leaves it unchanged, so
    // every multiset appears with exactly one eps.
    for (long n = 2; n <= 10; n += 2) {
        auto sets = enumerate_isolated_tangent_sets(n);
        std::set<std::vector<long>> seen;
        for (const auto& w : sets)
            CHECK(seen.insert(w.m).second);
    }
    // dimension 2: product of the signed weights of the 2-dim irrep is
    // 1 * (-1) = -1, hence eps = -1 there.
    CHECK(enumerate_isolated_tangent_sets(2)[0].eps == -1);
}

TEST_CASE("largest weight product at desk scale") {
    CHECK(max_weight_product(2) == 1);
    CHECK(max_weight_product(3) == 0);
    CHECK(max_weight_product(4) == 9);
    CHECK(max_weight_product(6) == 225);
}
