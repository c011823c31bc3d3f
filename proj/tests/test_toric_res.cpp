#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "singpoincare/toric.hpp"
#include "testutil.hpp"

using namespace singpoincare;

TEST_CASE("surface data for small types") {
    const ToricSurface a = toric_surface(1, 3);
    CHECK(a.b.entries == std::vector<long>{2, 2});
    CHECK(a.c.entries == std::vector<long>{3});
    CHECK(a.t == 1);

    const ToricSurface b = toric_surface(3, 5);
    CHECK(b.b.entries == std::vector<long>{3, 2});
    CHECK(b.c.entries == std::vector<long>{2, 3});
    CHECK(b.t == 2);

    CHECK_THROWS_AS(toric_surface(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(toric_surface(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(toric_surface(0, 5), std::invalid_argument);
}

TEST_CASE("fan vectors") {
    const auto v = resolution_vectors(toric_surface(3, 5));
    REQUIRE(v.size() == 4);
    CHECK(v[0] == std::array<long, 2>{1, 0});
    CHECK(v[1] == std::array<long, 2>{1, 1});
    CHECK(v[2] == std::array<long, 2>{2, 3});
    CHECK(v[3] == std::array<long, 2>{3, 5});

    const auto u = resolution_vectors(toric_surface(1, 4));
    REQUIRE(u.size() == 5);
    CHECK(u[2] == std::array<long, 2>{1, 2});
    CHECK(u[4] == std::array<long, 2>{1, 4});
}

TEST_CASE("stage plans") {
    const StagePlan p2 = stage_plan(toric_surface(1, 2));
    CHECK(p2.a == 1);
    CHECK(p2.b_count == 0);
    CHECK(p2.r_count == 0);

    const StagePlan p3 = stage_plan(toric_surface(1, 3));
    CHECK(p3.a == 2);
    CHECK(p3.b_count == 1);
    CHECK(p3.r_count == 0);

    const StagePlan p4 = stage_plan(toric_surface(1, 4));
    CHECK(p4.a == 2);
    CHECK(p4.b_count == 0);
    CHECK(p4.r_count == 1);
    REQUIRE(p4.residuals.size() == 1);
    CHECK(p4.residuals[0].d == 1);
    CHECK(p4.residuals[0].rounds == 1);
    CHECK(!p4.residuals[0].nontransversal);

    const StagePlan p5 = stage_plan(toric_surface(1, 5));
    REQUIRE(p5.residuals.size() == 1);
    CHECK(p5.residuals[0].d == 2);
    CHECK(p5.residuals[0].rounds == 1);
    CHECK(p5.residuals[0].nontransversal);
    CHECK(p5.residuals[0].depth == 2);

    const StagePlan p9 = stage_plan(toric_surface(1, 9));
    REQUIRE(p9.residuals.size() == 1);
    CHECK(p9.residuals[0].d == 6);
    CHECK(p9.residuals[0].rounds == 3);
    CHECK(p9.residuals[0].depth == 4);
}

TEST_CASE("strata weights") {
    const auto s5 = strata_numerical_data(toric_surface(1, 5));
    REQUIRE(s5.size() == 3);
    CHECK(s5[0].first.kind == -1);
    CHECK(s5[0].second.N == 1);
    CHECK(s5[0].second.nu == 1);
    CHECK(s5[0].second.codim == 1);
    CHECK(s5[1].first.kind == 0);
    CHECK(s5[1].second.nu == 3);
    CHECK(s5[2].second.N == 2);
    CHECK(s5[2].second.nu == 5);

    // a higher-dimensional base shifts the Jacobian weights by t
    const auto s35 = strata_numerical_data(toric_surface(3, 5));
    CHECK(s35[0].second.codim == 2);
    CHECK(s35[1].second.nu == 4);

    // (1, 9): rounds 1..3 over the single residual point
    const auto s9 = strata_numerical_data(toric_surface(1, 9));
    REQUIRE(s9.size() == 5);
    CHECK(s9[2].second.N == 2);
    CHECK(s9[2].second.nu == 5);
    CHECK(s9[3].second.N == 3);
    CHECK(s9[3].second.nu == 7);
    CHECK(s9[4].second.N == 4);
    CHECK(s9[4].second.nu == 9);
}

TEST_CASE("fan and insertion identities on random types") {
    testutil::Rng rng(31337);
    int done = 0;
    while (done < 50) {
        const long q = rng(2, 200);
        const long p = rng(1, q - 1);
        if (std::gcd(p, q) != 1) continue;
        ++done;
        const ToricSurface ts = toric_surface(p, q);
        const auto v = resolution_vectors(ts);
        REQUIRE(v.size() == ts.b.entries.size() + 2);
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            CHECK(v[i][0] * v[i + 1][1] - v[i][1] * v[i + 1][0] == 1);
            CHECK(std::gcd(v[i][0], v[i][1]) == 1);
        }
        // stage_plan asserts a - r - 1 = b internally
        const StagePlan plan = stage_plan(ts);
        CHECK(plan.a >= 1);
        long heavy = 0;
        for (long cj : ts.c.entries)
            if (cj >= 3) ++heavy;
        CHECK(plan.b_count + plan.r_count == heavy);
    }
}
