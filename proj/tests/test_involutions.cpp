#include "gencert/involutions.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gencert;

TEST_CASE("symmetric group involutions follow the telephone recurrence") {
    for (unsigned long n = 0; n <= 40; ++n) REQUIRE(sym_involutions_plus1(n) == oracle::telephone(n));
    CHECK(sym_involutions_plus1(12) == 140152);
    CHECK(ipow(2, 11) * sym_involutions_plus1(12) == ipow(2, 14) * 17519);
}

TEST_CASE("root data") {
    CHECK(RootSystemDatum::A(3).dim() == 15);
    CHECK(RootSystemDatum::A(3).positive_roots() == 6);
    CHECK(RootSystemDatum::B(3).dim() == 21);
    CHECK(RootSystemDatum::C(2).positive_roots() == 4);
    CHECK(RootSystemDatum::D(4).dim() == 28);
    CHECK(RootSystemDatum::D(4).positive_roots() == 12);
    CHECK(RootSystemDatum::G2().n2() == 8);
    CHECK(aut_i2_upper(RootSystemDatum::C(2), 2) == 2 * (64 + 32));
}

TEST_CASE("brute-force involution counts sit below the root-datum bound") {
    const auto [sp_order, sp_inv] = oracle::sp4_2_census();
    CHECK(sp_order == 720);
    CHECK(sp_inv == 75);  // Sp_4(2) = S_6
    CHECK(ExactInt(sp_inv) < aut_i2_upper(RootSystemDatum::C(2), 2));
    const auto [gl_order, gl_inv] = oracle::gl3_2_census();
    CHECK(gl_order == 168);
    CHECK(gl_inv == 21);
    CHECK(ExactInt(gl_inv) < aut_i2_upper(RootSystemDatum::A(2), 2));
}

TEST_CASE("explicit class sizes dominate the closed-form lower bounds") {
    for (auto f : {Family::linear, Family::unitary, Family::symplectic, Family::orthogonal_plus,
                   Family::orthogonal_minus, Family::orthogonal_odd}) {
        for (unsigned long n = 8; n <= 24; ++n) {
            for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul, 11ul, 13ul, 16ul, 25ul}) {
                GroupSpec s;
                try {
                    s = GroupSpec::make(f, n, q);
                } catch (const SpecError&) {
                    continue;
                }
                const auto rec = involution_class_size_lower(s);
                if (f == Family::symplectic && q % 4 == 3) {
                    REQUIRE(rec.class_size_lower < i2_lower_bound(s));
                    continue;
                }
                REQUIRE(rec.class_size_lower >= i2_lower_bound(s));
                REQUIRE(ExactRat(i2_lower_bound(s)) >= i2_lower_bound_exact(s));
                REQUIRE(ExactRat(i2_lower_bound(s)) - i2_lower_bound_exact(s) < 1);
                REQUIRE(rec.class_size_lower * rec.centralizer_order <= rec.ambient_order * rec.omega_index);
            }
        }
    }
}

TEST_CASE("PSp_4(2^a) data") {
    const auto c = psp4_counts(8);
    CHECK(c.a == 3);
    for (const auto& row : c.rows) {
        if (!row.present) continue;
        CHECK(row.index > 1);
        CHECK(row.i2 > 0);
    }
    // Sz(q) needs a odd, the subfield row a composite.
    const auto c4 = psp4_counts(16);
    bool sz = false;
    for (const auto& row : c4.rows) sz = sz || (row.type.find("Sz") != std::string::npos && row.present);
    CHECK_FALSE(sz);
    CHECK_THROWS(psp4_counts(2));
    CHECK_THROWS(psp4_counts(9));
}

TEST_CASE("the closed-form bound for PSp_n(q) fails when q = 3 mod 4") {
    CHECK(oracle::psp_i2_exact(4, 3) == 315);  // 45 + 270 in PSp_4(3) = PSU_4(2)
    for (unsigned long n : {8ul, 12ul, 16ul}) {
        for (unsigned long q : {3ul, 7ul, 11ul}) {
            const auto s = GroupSpec::make(Family::symplectic, n, q);
            const ExactInt exact = oracle::psp_i2_exact(n, q);
            INFO(s.name());
            CHECK(exact < i2_lower_bound(s));
            CHECK(exact >= involution_class_size_lower(s).class_size_lower);
        }
        for (unsigned long q : {5ul, 9ul, 13ul}) {
            CHECK(oracle::psp_i2_exact(n, q) >= i2_lower_bound(GroupSpec::make(Family::symplectic, n, q)));
        }
    }
}
