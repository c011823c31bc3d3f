#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singpoincare/curve.hpp"

using namespace singpoincare;

namespace {

ContactProfile interior(NodeId id, long g) { return {LocKind::interior, {id}, {g}, 0}; }

ContactProfile meet(NodeId a, long ga, NodeId b, long gb) {
    return {LocKind::intersection, {a, b}, {ga, gb}, 0};
}

ContactProfile on_strict(NodeId id, long g, long gs) {
    return {LocKind::on_strict, {id}, {g}, gs};
}

void check_node(const CurveResolution& res, NodeId id, long r, long N, long nu, long M, long mu) {
    const ChainNode& n = res.node(id);
    CHECK(n.r == r);
    CHECK(n.N == N);
    CHECK(n.nu == nu);
    CHECK(n.M == M);
    CHECK(n.mu == mu);
}

}  // namespace

TEST_CASE("cusp resolution (2, [3])") {
    const CurveResolution res = build_chains({2, {3}});
    REQUIRE(res.nodes.size() == 3);
    check_node(res, {1, 1, 1}, 2, 2, 2, 2, 1);
    check_node(res, {1, 2, 1}, 1, 3, 3, 1, 1);
    check_node(res, {1, 2, 2}, 1, 6, 5, 1, 2);
    CHECK(res.node({1, 2, 2}).is_F);
    CHECK(!res.node({1, 2, 1}).is_F);
    CHECK(res.strict_meets == NodeId{1, 2, 2});
    REQUIRE(res.chains.size() == 1);
    CHECK(res.chains[0] ==
          std::vector<NodeId>{{1, 1, 1}, {1, 2, 2}, {1, 2, 1}});
}

TEST_CASE("resolution of (2, [5])") {
    const CurveResolution res = build_chains({2, {5}});
    REQUIRE(res.nodes.size() == 4);
    check_node(res, {1, 1, 1}, 2, 2, 2, 2, 1);
    check_node(res, {1, 1, 2}, 2, 4, 3, 2, 1);
    check_node(res, {1, 2, 1}, 1, 5, 4, 1, 1);
    check_node(res, {1, 2, 2}, 1, 10, 7, 1, 2);
    CHECK(res.chains[0] ==
          std::vector<NodeId>{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {1, 2, 1}});
    CHECK(res.strict_meets == NodeId{1, 2, 2});
}

TEST_CASE("two-stage resolution (4, [6, 7])") {
    const CurveResolution res = build_chains({4, {6, 7}});
    REQUIRE(res.nodes.size() == 5);
    check_node(res, {1, 1, 1}, 4, 4, 2, 4, 1);
    check_node(res, {1, 2, 1}, 2, 6, 3, 2, 1);
    check_node(res, {1, 2, 2}, 2, 12, 5, 2, 2);
    check_node(res, {2, 2, 1}, 1, 13, 6, 1, 2);
    check_node(res, {2, 2, 2}, 1, 26, 11, 1, 4);
    CHECK(res.node({1, 2, 2}).is_F);
    CHECK(res.node({2, 2, 2}).is_F);
    CHECK(res.strict_meets == NodeId{2, 2, 2});
    REQUIRE(res.chains.size() == 2);
    CHECK(res.chains[0] ==
          std::vector<NodeId>{{1, 1, 1}, {1, 2, 2}, {1, 2, 1}});
    CHECK(res.chains[1] == std::vector<NodeId>{{2, 2, 1}, {2, 2, 2}});
}

TEST_CASE("three-block resolution (5, [7])") {
    const CurveResolution res = build_chains({5, {7}});
    REQUIRE(res.nodes.size() == 5);
    check_node(res, {1, 1, 1}, 5, 5, 2, 5, 1);
    check_node(res, {1, 2, 1}, 2, 7, 3, 2, 1);
    check_node(res, {1, 2, 2}, 2, 14, 5, 2, 2);
    check_node(res, {1, 3, 1}, 1, 20, 7, 1, 3);
    check_node(res, {1, 3, 2}, 1, 35, 12, 1, 5);
    CHECK(res.strict_meets == NodeId{1, 3, 2});
    CHECK(res.chains[0] ==
          std::vector<NodeId>{{1, 1, 1}, {1, 3, 1}, {1, 3, 2}, {1, 2, 2}, {1, 2, 1}});
}

TEST_CASE("arc multiplicity") {
    const CurveResolution res = build_chains({2, {3}});
    CHECK(multiplicity_n(res, {LocKind::off_x, {}, {}, 0}) == 0);
    CHECK(multiplicity_n(res, interior({1, 2, 2}, 3)) == 6);
    CHECK(multiplicity_n(res, meet({1, 1, 1}, 1, {1, 2, 2}, 1)) == 3);
    CHECK_THROWS_AS(multiplicity_n(res, interior({1, 2, 2}, 0)), std::invalid_argument);
    CHECK_THROWS_AS(multiplicity_n(res, interior({2, 1, 1}, 1)), std::invalid_argument);
}

TEST_CASE("contact order router on the cusp") {
    const CurveResolution res = build_chains({2, {3}});
    CHECK(dx_curve(res, {LocKind::off_x, {}, {}, 0}) == ExtNat::fin(0));
    CHECK(dx_curve(res, {LocKind::on_curve, {}, {}, 0}) == ExtNat::inf());
    CHECK(dx_curve(res, interior({1, 1, 1}, 1)) == ExtNat::fin(1));
    CHECK(dx_curve(res, interior({1, 1, 1}, 2)) == ExtNat::fin(2));
    // odd multiplicity falls through to d = n
    CHECK(dx_curve(res, interior({1, 2, 1}, 1)) == ExtNat::fin(1));
    // even block, not the stage end: d = lambda k_i
    CHECK(dx_curve(res, interior({1, 2, 1}, 2)) == ExtNat::fin(3));
    CHECK(dx_curve(res, interior({1, 2, 1}, 4)) == ExtNat::fin(6));
    // junction E1.1.1 * E1.2.2 (the block-1 end against the stage end)
    CHECK(dx_curve(res, meet({1, 1, 1}, 1, {1, 2, 2}, 1)) == ExtNat::fin(3));
    CHECK(dx_curve(res, meet({1, 1, 1}, 2, {1, 2, 2}, 1)) == ExtNat::fin(5));
    // arguments commute
    CHECK(dx_curve(res, meet({1, 2, 2}, 1, {1, 1, 1}, 2)) == ExtNat::fin(5));
    // on the strict transform, d = lambda k_s + gamma_strict
    CHECK(dx_curve(res, on_strict({1, 2, 2}, 1, 1)) == ExtNat::fin(4));
    CHECK(dx_curve(res, on_strict({1, 2, 2}, 1, 2)) == ExtNat::fin(5));
    CHECK(dx_curve(res, on_strict({1, 2, 2}, 2, 1)) == ExtNat::fin(7));
    // interior of the stage end: no formula
    CHECK_THROWS_AS(dx_curve(res, interior({1, 2, 2}, 2)), dx_unsupported);
    // intersections inside an even block: no formula
    CHECK_THROWS_AS(dx_curve(res, meet({1, 2, 1}, 2, {1, 2, 2}, 2)), dx_unsupported);
    // the strict transform does not meet E1.2.1
    CHECK_THROWS_AS(dx_curve(res, on_strict({1, 2, 1}, 1, 1)), dx_unsupported);
    // non-meeting pair is a caller error, not a missing formula
    CHECK_THROWS_AS(dx_curve(res, meet({1, 1, 1}, 1, {1, 2, 1}, 1)), std::invalid_argument);
}

TEST_CASE("contact order router across blocks and stages") {
    const CurveResolution r57 = build_chains({5, {7}});
    // consecutive divisors of the odd block 1 of (2, [5])
    const CurveResolution r25 = build_chains({2, {5}});
    CHECK(dx_curve(r25, meet({1, 1, 1}, 1, {1, 1, 2}, 1)) == ExtNat::fin(3));
    CHECK(dx_curve(r25, meet({1, 1, 1}, 2, {1, 1, 2}, 2)) == ExtNat::fin(6));
    // interior of an odd block: offset k_{i-1} + sum of completed odd blocks
    CHECK(dx_curve(r57, interior({1, 3, 1}, 5)) == ExtNat::fin(18));
    CHECK(dx_curve(r57, interior({1, 1, 1}, 5)) == ExtNat::fin(5));
    // block-skip junction E1.1.1 * E1.3.1 (odd to odd, two apart)
    CHECK(dx_curve(r57, meet({1, 1, 1}, 2, {1, 3, 1}, 1)) == ExtNat::fin(6));
    CHECK(dx_curve(r57, meet({1, 1, 1}, 4, {1, 3, 1}, 2)) == ExtNat::fin(12));
    CHECK(dx_curve(r57, meet({1, 1, 1}, 7, {1, 3, 1}, 1)) == ExtNat::fin(11));
    // same-block junction in the final odd block of (5, [7])
    CHECK(dx_curve(r57, meet({1, 3, 1}, 5, {1, 3, 2}, 1)) == ExtNat::fin(25));
    // multiplicity not divisible by m falls through to d = n
    CHECK(dx_curve(r57, meet({1, 3, 1}, 1, {1, 3, 2}, 1)) == ExtNat::fin(8));
    // w odd: junction with the stage end has no printed formula when lambda exists
    CHECK_THROWS_AS(dx_curve(r57, meet({1, 2, 2}, 5, {1, 3, 2}, 1)), dx_unsupported);
    // junctions between stages have no formula
    const CurveResolution r467 = build_chains({4, {6, 7}});
    CHECK_THROWS_AS(dx_curve(r467, meet({1, 2, 2}, 1, {2, 2, 2}, 1)), dx_unsupported);
    // even-block junction with the final divisor
    CHECK_THROWS_AS(dx_curve(r467, meet({2, 2, 1}, 2, {2, 2, 2}, 2)), dx_unsupported);
}

TEST_CASE("contact decomposition lambda") {
    CHECK(contact_lambda({{1, 3}}) == 3);
    CHECK(contact_lambda({{2, 1}, {1, 2}}) == 4);
    CHECK(contact_lambda({{3, 2}, {4, 1}}) == 10);
    CHECK_THROWS_AS(contact_lambda({}), std::invalid_argument);
    CHECK_THROWS_AS(contact_lambda({{1, 1}, {3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(contact_lambda({{1, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(contact_lambda({{1, 0}}), std::invalid_argument);
}

TEST_CASE("contact order through a tangency point") {
    // second slot wins: d_zbar infinite
    CHECK(dx_nontransversal(ExtNat::inf(), ExtNat::fin(7), 2, 3, {}) == ExtNat::fin(13));
    // first slot: cE = cE' = cE'' = 1, no tangential contacts
    CHECK(dx_nontransversal(ExtNat::fin(5), ExtNat::inf(), 1, 0, {1, 1, 1, 0, 0}) ==
          ExtNat::fin(9));
    // the floor(csum/2) branch saturates
    CHECK(dx_nontransversal(ExtNat::fin(0), ExtNat::inf(), 1, 0, {4, 1, 1, 9, 9}) ==
          ExtNat::fin(9));
    // negative intermediate values are tolerated inside the max
    CHECK(dx_nontransversal(ExtNat::fin(2), ExtNat::inf(), 1, 0, {0, 0, 2, 5, 0}) ==
          ExtNat::fin(5));
    // min of the two sides
    CHECK(dx_nontransversal(ExtNat::fin(5), ExtNat::fin(6), 1, 1, {1, 1, 1, 0, 0}) ==
          ExtNat::fin(7));
    CHECK_THROWS_AS(dx_nontransversal(ExtNat::fin(0), ExtNat::fin(0), 0, 0, {}),
                    std::invalid_argument);
}
