#include "gencert/bounds.hpp"
#include "grid.hpp"
#include "displayed_forms.hpp"

#include <doctest.h>

#include <map>

using namespace gencert;

TEST_CASE("PSL_3(4) instance is exactly 1/5") {
    CHECK(q2p_bound_psl34() == make_rat(1, 5));
    // 360 = classes * index
    const Psl34Data d;
    CHECK(d.classes * d.index == 360);
}

TEST_CASE("PSp_4(2^a) Q_{2,5} bound") {
    for (unsigned long a = 3; a <= 10; ++a) {
        const auto b = q25_bound_psp4(ipow(2, a));
        INFO("q = 2^" << a);
        CHECK(b.verdict == Verdict::certified);
        CHECK(b.assembled < 1);
        CHECK(b.assembled_le_displayed);
        ExactRat sum = 0;
        for (const auto& t : b.terms) sum += t.contribution;
        CHECK(sum == b.assembled);
    }
    const auto b4 = q25_bound_psp4(4);
    CHECK(b4.verdict == Verdict::inconclusive);
    CHECK(b4.assembled >= 1);
}

TEST_CASE("report totals are the exact sum of the terms") {
    for (const auto& s : grid::specs(8, 16)) {
        const auto rep = q2_bound_auto(s);
        ExactRat sum = 0, sig = 0;
        for (const auto& t : rep.terms) {
            REQUIRE(t.contribution == ExactRat(t.classes) * t.count_factor * ExactRat(t.i2_upper) / ExactRat(rep.i2_denominator));
            sum += t.contribution;
        }
        for (const auto& x : rep.sigma) sig += x;
        REQUIRE(sum == rep.total);
        REQUIRE(sig == rep.total);
        REQUIRE((rep.verdict == Verdict::certified) == (rep.total < 1));
    }
}

TEST_CASE("POmega-_n closed forms over-approximate the evaluator") {
    for (unsigned long n = 14; n <= 30; n += 2) {
        for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul, 11ul, 13ul, 16ul, 25ul}) {
            const auto s = GroupSpec::make(Family::orthogonal_minus, n, q);
            BoundOptions keep;
            keep.drop_sigma0_if_infeasible = false;
            const auto rep = q2_bound(s, keep);
            INFO(s.name());
            REQUIRE(QuadraticSurd(rep.sigma[3]) <= closed_form_sigma3_omegaminus(n, q));
            REQUIRE(QuadraticSurd(rep.sigma[0]) <= closed_form_sigma0_omegaminus(n, q));
            for (unsigned i = 1; i <= 8; ++i) {
                if (i != 3) REQUIRE(rep.sigma[i] == 0);
            }
        }
    }
    CHECK_THROWS_AS(closed_form_sigma3_omegaminus(12, 2), DomainError);
}

TEST_CASE("POmega-_14(2) certifies only through the S-class refinement") {
    const auto s = GroupSpec::make(Family::orthogonal_minus, 14, 2);
    const auto rep = q2_bound(s);
    CHECK(rep.witness.r == 43);
    CHECK(rep.sigma0_dropped);
    CHECK(rep.verdict == Verdict::certified);
    CHECK(rep.total == rep.sigma[3]);
    BoundOptions keep;
    keep.drop_sigma0_if_infeasible = false;
    CHECK(q2_bound(s, keep).verdict == Verdict::inconclusive);
}

TEST_CASE("generic totals are not monotone in q") {
    // r is the smallest primitive prime divisor, which jumps with q; the
    // S-class terms scale with |N_G(<x>)|/r, so totals can rise with q.
    BoundOptions keep;
    keep.drop_sigma0_if_infeasible = false;
    std::map<std::pair<Family, unsigned long>, ExactRat> last;
    std::size_t rises = 0, pairs = 0;
    for (const auto& s : grid::specs(8, 24)) {
        if (in_dagger_list(s)) continue;
        const auto rep = q2_bound(s, keep);
        const auto key = std::make_pair(s.family, s.n);
        if (auto it = last.find(key); it != last.end()) {
            ++pairs;
            rises += rep.total > it->second;
        }
        last[key] = rep.total;
    }
    MESSAGE(rises << " of " << pairs << " consecutive-q pairs increase");
    const auto t3 = q2_bound(GroupSpec::make(Family::linear, 9, 3), keep);
    const auto t4 = q2_bound(GroupSpec::make(Family::linear, 9, 4), keep);
    CHECK(t3.witness.r == 757);
    CHECK(t4.witness.r == 19);
    CHECK(t4.total > t3.total);
    CHECK(t4.total < 1);
}

TEST_CASE("POmega+_12(q) against the displayed Sigma bounds") {
    for (unsigned long q : {3ul, 5ul, 7ul, 9ul}) {
        const auto s = GroupSpec::make(Family::orthogonal_plus, 12, q);
        const auto rep = q2_bound_small_n(s);
        const auto forms = displayed_forms::omega_plus_12(q);
        INFO("q = " << q);
        CHECK(rep.sigma[0] <= forms[0]);
        CHECK(rep.sigma[1] <= forms[1]);
        CHECK(rep.sigma[2] <= forms[2]);
        CHECK(rep.sigma[3] <= forms[3]);
        CHECK(rep.verdict == Verdict::certified);
        CHECK(rep.denominator == Denominator::table4);
    }
    const auto s2 = GroupSpec::make(Family::orthogonal_plus, 12, 2);
    const auto rep2 = q2_bound_small_n(s2);
    CHECK(rep2.verdict == Verdict::certified);
    CHECK(rep2.denominator == Denominator::table5);
    REQUIRE(rep2.table4_total.has_value());
    CHECK(*rep2.table4_total >= 1);
    BoundOptions no_fallback;
    no_fallback.table5_fallback = false;
    CHECK(q2_bound_small_n(s2, no_fallback).verdict == Verdict::inconclusive);
}

TEST_CASE("r override") {
    const auto s = GroupSpec::make(Family::orthogonal_plus, 12, 19);
    BoundOptions o;
    o.r_override = ExactInt(7);
    CHECK_THROWS_AS(q2_bound_small_n(s, o), SpecError);  // 19 has order 6 mod 7, not 10
    o.r_override = ExactInt(11);
    const auto rep = q2_bound_small_n(s, o);
    CHECK(rep.witness.r == 11);
    std::size_t socles = 0;
    for (const auto& t : rep.terms) socles += t.sigma == 0;
    CHECK(socles == 3);
    o.r_override = ExactInt(4);
    CHECK_THROWS_AS(q2_bound(GroupSpec::make(Family::linear, 9, 2), o), SpecError);
}

TEST_CASE("scope errors") {
    CHECK_THROWS_AS(q2_bound(GroupSpec::make(Family::linear, 7, 2)), SpecError);
    CHECK_THROWS_AS(q2_bound(GroupSpec::make(Family::orthogonal_plus, 8, 2)), SpecError);
    CHECK_THROWS_AS(q2_bound_small_n(GroupSpec::make(Family::linear, 12, 2)), SpecError);
}
