#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "singpoincare/contfrac.hpp"
#include "singpoincare/laurent.hpp"
#include "testutil.hpp"

using namespace singpoincare;

TEST_CASE("hj expansions of small fractions") {
    CHECK(hj(3, 2).entries == std::vector<long>{2, 2});
    CHECK(hj(3, 1).entries == std::vector<long>{3});
    CHECK(hj(7, 5).entries == std::vector<long>{2, 2, 3});
    CHECK(hj(5, 4).entries == std::vector<long>{2, 2, 2, 2});
    CHECK(hj(12, 5).entries == std::vector<long>{3, 2, 3});
}

TEST_CASE("hj entries reconstruct n/k") {
    testutil::Rng rng(555);
    int done = 0;
    while (done < 200) {
        const long n = rng(2, 400);
        const long k = rng(1, n - 1);
        if (std::gcd(n, k) != 1) continue;
        ++done;
        const HJExpansion e = hj(n, k);
        for (long b : e.entries) CHECK(b >= 2);
        // value of [b_1, ..., b_r] by a right fold: b_i - 1/(next)
        Rat v(e.entries.back());
        for (auto it = e.entries.rbegin() + 1; it != e.entries.rend(); ++it) {
            v = Rat(*it) - 1 / v;
            v.canonicalize();
        }
        CHECK(v == Rat(n, k));
    }
}

TEST_CASE("hj preconditions") {
    CHECK_THROWS_AS(hj(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(hj(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(hj(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(hj(3, 0), std::invalid_argument);
}

TEST_CASE("euclidean staircase tables") {
    const EuclidTable t1 = euclid_table(2, {3});
    CHECK(t1.stages() == 1);
    CHECK(t1.a[0] == std::vector<long>{1, 2});
    CHECK(t1.r[0] == std::vector<long>{2, 1});
    CHECK(t1.w[0] == 2);

    const EuclidTable t2 = euclid_table(2, {5});
    CHECK(t2.a[0] == std::vector<long>{2, 2});
    CHECK(t2.r[0] == std::vector<long>{2, 1});

    const EuclidTable t3 = euclid_table(4, {6, 7});
    CHECK(t3.stages() == 2);
    CHECK(t3.a[0] == std::vector<long>{1, 2});
    CHECK(t3.r[0] == std::vector<long>{4, 2});
    CHECK(t3.a[1] == std::vector<long>{0, 2});
    CHECK(t3.r[1] == std::vector<long>{2, 1});

    const EuclidTable t4 = euclid_table(5, {7});
    CHECK(t4.a[0] == std::vector<long>{1, 2, 2});
    CHECK(t4.r[0] == std::vector<long>{5, 2, 1});
    CHECK(t4.w[0] == 3);
}

TEST_CASE("staircase table invariants on random branches") {
    testutil::Rng rng(8080);
    int done = 0;
    while (done < 100) {
        const long m = rng(2, 9);
        const long k1 = m + rng(1, 30);
        if (std::gcd(m, k1) == m) continue;  // gcd must drop at stage 1
        std::vector<long> ks{k1};
        long g = std::gcd(m, k1);
        while (g != 1) {
            // pick the next exponent so the gcd strictly drops
            long next = ks.back() + rng(1, 20);
            long g2 = std::gcd(g, next);
            if (g2 >= g) continue;
            ks.push_back(next);
            g = g2;
        }
        ++done;
        const EuclidTable t = euclid_table(m, ks);
        REQUIRE(t.stages() == long(ks.size()));
        long gin = m;
        for (long i = 1; i <= t.stages(); ++i) {
            const auto& as = t.a[i - 1];
            const auto& rs = t.r[i - 1];
            REQUIRE(as.size() == rs.size());
            const size_t w = as.size();
            const long kappa = t.k[i - 1] - (i == 1 ? 0 : t.k[i - 2]);
            // r_{i,1} is the incoming gcd, the divisions chain down to the next one
            CHECK(rs[0] == gin);
            CHECK(kappa == as[0] * rs[0] + (w >= 2 ? rs[1] : 0));
            for (size_t j = 1; j < w; ++j) {
                CHECK(rs[j - 1] == as[j] * rs[j] + (j + 1 < w ? rs[j + 1] : 0));
                CHECK(rs[j] < rs[j - 1]);
            }
            gin = std::gcd(gin, t.k[i - 1]);
            CHECK(rs.back() == gin);
        }
        CHECK(gin == 1);
    }
}

TEST_CASE("staircase preconditions") {
    CHECK_THROWS_AS(euclid_table(1, {3}), std::invalid_argument);
    CHECK_THROWS_AS(euclid_table(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(euclid_table(4, {3}), std::invalid_argument);
    CHECK_THROWS_AS(euclid_table(4, {6, 6}), std::invalid_argument);
    CHECK_THROWS_AS(euclid_table(4, {8}), std::invalid_argument);   // gcd never drops
    CHECK_THROWS_AS(euclid_table(4, {6}), std::invalid_argument);   // gcd stops at 2
}
