#include "gencert/grouporders.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gencert;

namespace {

ExactInt order(Family f, unsigned long n, unsigned long q) { return simple_order(GroupSpec::make(f, n, q)); }

}  // namespace

TEST_CASE("simple orders match the ATLAS") {
    CHECK(order(Family::linear, 2, 7) == 168);
    CHECK(order(Family::linear, 3, 4) == 20160);
    CHECK(order(Family::linear, 4, 2) == 20160);
    CHECK(order(Family::linear, 2, 9) == 360);
    CHECK(order(Family::unitary, 3, 3) == 6048);
    CHECK(order(Family::unitary, 4, 2) == 25920);
    CHECK(order(Family::unitary, 4, 3) == 3265920);
    CHECK(order(Family::unitary, 5, 2) == 13685760);
    CHECK(order(Family::symplectic, 4, 3) == 25920);
    CHECK(order(Family::symplectic, 6, 2) == 1451520);
    CHECK(order(Family::orthogonal_odd, 7, 3) == ExactInt("4585351680"));
    CHECK(order(Family::orthogonal_plus, 8, 2) == 174182400);
    CHECK(order(Family::orthogonal_minus, 8, 2) == 197406720);
    CHECK(order(Family::orthogonal_plus, 8, 3) == ExactInt("4952179814400"));
    CHECK(order(Family::orthogonal_minus, 8, 3) == ExactInt("10151968619520"));
    CHECK(order(Family::orthogonal_minus, 10, 2) == ExactInt("25015379558400"));
}

TEST_CASE("matrix group orders against brute force") {
    CHECK(form_group_order(FormGroup::Sp, 4, 2) == oracle::sp4_2_census().first);
    CHECK(form_group_order(FormGroup::GL, 3, 2) == oracle::gl3_2_census().first);
    CHECK(form_group_order(FormGroup::GU, 2, 2) == 18);
    CHECK(form_group_order(FormGroup::GL, 0, 5) == 1);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(GroupSpec::make(Family::linear, 9, 6), SpecError);
    CHECK_THROWS_AS(GroupSpec::make(Family::symplectic, 9, 2), SpecError);
    CHECK_THROWS_AS(GroupSpec::make(Family::orthogonal_odd, 9, 4), SpecError);
    CHECK_THROWS_AS(parse_family("psx"), SpecError);
    const auto s = GroupSpec::make(Family::orthogonal_plus, 14, 4);
    CHECK(s.p == 2);
    CHECK(s.a == 2);
    CHECK(s.name() == "POmega+14(4)");
    CHECK_FALSE(GroupSpec::make(Family::orthogonal_plus, 8, 2).in_theorem_scope());
    CHECK(GroupSpec::make(Family::orthogonal_plus, 8, 3).in_theorem_scope());
    CHECK_FALSE(GroupSpec::make(Family::linear, 7, 2).in_theorem_scope());
}

TEST_CASE("exponent e per family") {
    CHECK(table1_e(GroupSpec::make(Family::linear, 9, 2)) == 9);
    CHECK(table1_e(GroupSpec::make(Family::symplectic, 12, 2)) == 12);
    CHECK(table1_e(GroupSpec::make(Family::orthogonal_minus, 14, 2)) == 14);
    CHECK(table1_e(GroupSpec::make(Family::orthogonal_plus, 14, 2)) == 12);
    CHECK(table1_e(GroupSpec::make(Family::orthogonal_odd, 13, 3)) == 12);
    CHECK(table1_e(GroupSpec::make(Family::unitary, 9, 2)) == 18);
    CHECK(table1_e(GroupSpec::make(Family::unitary, 8, 2)) == 14);
}

TEST_CASE("select_r returns a verified primitive prime divisor") {
    CHECK(select_r(GroupSpec::make(Family::symplectic, 12, 2)).r == 13);
    CHECK(select_r(GroupSpec::make(Family::orthogonal_minus, 14, 2)).r == 43);
    CHECK(select_r(GroupSpec::make(Family::unitary, 8, 2)).r == 43);
    CHECK(select_r(GroupSpec::make(Family::orthogonal_plus, 12, 3)).r == 61);
    for (auto f : {Family::linear, Family::unitary, Family::symplectic, Family::orthogonal_plus,
                   Family::orthogonal_minus}) {
        for (unsigned long n = 8; n <= 20; n += 2) {
            for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul}) {
                const auto s = GroupSpec::make(f, n, q);
                if (!s.in_theorem_scope()) continue;
                const auto w = select_r(s);
                REQUIRE(w.verify());
                REQUIRE(oracle::primitive_part(q, w.e) % w.r == 0);
                REQUIRE(simple_order(s) % w.r == 0);
            }
        }
    }
    CHECK_THROWS_AS(select_r(GroupSpec::make(Family::linear, 7, 2)), SpecError);
}

TEST_CASE("centre constants") {
    // -I lies in Omega^eps_n(q) iff q^{n/2} = eps (mod 4), q odd.
    CHECK(center_constants(GroupSpec::make(Family::orthogonal_plus, 12, 3)).z_eps == 2);
    CHECK(center_constants(GroupSpec::make(Family::orthogonal_minus, 10, 3)).z_eps == 2);
    CHECK(center_constants(GroupSpec::make(Family::orthogonal_plus, 10, 3)).z_eps == 1);
    CHECK(center_constants(GroupSpec::make(Family::orthogonal_plus, 12, 4)).z_eps == 1);
    // |SO^+_8(3)| / |Omega^+_8(3)| / |Z| reproduces the simple order.
    const auto s = GroupSpec::make(Family::orthogonal_plus, 8, 3);
    const auto cc = center_constants(s);
    CHECK(form_group_order(FormGroup::SO_plus, 8, 3) / (ExactInt(cc.a_eps) * cc.z_eps) == simple_order(s));
}
