#include "gencert/coverage.hpp"
#include "gencert/sweep.hpp"

#include <doctest.h>

using namespace gencert;

TEST_CASE("coverage lookup") {
    auto c = classify("PSL3(4)");
    CHECK(c.coverage == CoverageCase::table3);
    CHECK(*c.prime == 7);
    c = classify("PSp4(9)");
    CHECK(c.coverage == CoverageCase::lemma24);
    CHECK(*c.prime == 5);
    c = classify("PSU8(2)");
    CHECK(c.coverage == CoverageCase::theorem2);
    CHECK(*c.e == 14);
    CHECK(*c.prime == 43);
    CHECK(classify("POmega+8(2)").coverage == CoverageCase::table3);
    CHECK(classify("POmega+8(3)").coverage == CoverageCase::theorem2);
    CHECK(classify("PSL2(9)").coverage == CoverageCase::table3);
    CHECK(classify("PSL7(2)").coverage == CoverageCase::table2);
    CHECK(classify("PSp4(5)").coverage == CoverageCase::table2);
    CHECK(classify("PSp4(8)").coverage == CoverageCase::lemma24);
    CHECK(classify("PSp4(3)").coverage == CoverageCase::lemma24);
    CHECK(classify("POmega7(3)").coverage == CoverageCase::table2);
    CHECK(classify("POmega-6(2)").canonical == "PSU4(2)");
    CHECK(classify("POmega-6(2)").coverage == CoverageCase::table3);
    CHECK(classify("A7").coverage == CoverageCase::alternating);
    CHECK(*classify("A7").prime == 5);
    CHECK(*classify("Alt(9)").prime == 3);
    CHECK(*classify("M11").prime == 11);
    CHECK(*classify("McL").prime == 5);
    CHECK(*classify("Co1").prime == 3);
    CHECK(classify("Sz(8)").coverage == CoverageCase::suzuki);
    CHECK(classify("E8(2)").coverage == CoverageCase::exceptional);
    CHECK(classify("2F4(2)'").coverage == CoverageCase::exceptional);
    for (const char* bad : {"PSL2(2)", "PSp4(2)", "PSU3(2)", "PSL3(6)", "Sz(2)", "Sz(4)", "A4", "Foo", "2F4(2)",
                            "POmega+4(3)"}) {
        CHECK_THROWS_AS(classify(bad), SpecError);
    }
}

TEST_CASE("range and q-list parsing") {
    CHECK(parse_range("14..30") == std::make_pair(14ul, 30ul));
    CHECK(parse_range("12") == std::make_pair(12ul, 12ul));
    CHECK_THROWS_AS(parse_range("30..14"), SpecError);
    CHECK_THROWS_AS(parse_range("a..b"), SpecError);
    const auto qs = parse_q_list("2..10,25,3");
    CHECK(qs == std::vector<ExactInt>{2, 3, 4, 5, 7, 8, 9, 25});
    CHECK_THROWS_AS(parse_q_list("6"), SpecError);
    CHECK_THROWS_AS(parse_q_list("2,,3"), SpecError);
}

TEST_CASE("sweep output order does not depend on the thread count") {
    SweepJob job;
    job.family = Family::orthogonal_minus;
    job.n_min = 14;
    job.n_max = 20;
    job.qs = parse_q_list("2..9");
    job.threads = 1;
    const auto serial = run_sweep(job);
    job.threads = 6;
    const auto parallel = run_sweep(job);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].spec == parallel[i].spec);
        CHECK(serial[i].report->total == parallel[i].report->total);
        CHECK(serial[i].status == PointStatus::certified);
    }
    for (std::size_t i = 1; i < serial.size(); ++i) {
        const auto& a = serial[i - 1].spec;
        const auto& b = serial[i].spec;
        CHECK((a.n < b.n || (a.n == b.n && a.q < b.q)));
    }
}

TEST_CASE("sweep routing and expectations") {
    SweepJob job;
    job.family = Family::symplectic;
    job.n_min = 11;
    job.n_max = 12;
    job.qs = {2, 3};
    const auto pts = run_sweep(job);
    REQUIRE(pts.size() == 2);  // odd n is skipped
    CHECK(pts[0].expectation == Expectation::small_n);
    CHECK(pts[0].report->method == "small-n");
    CHECK(pts[1].expectation == Expectation::must_certify);
    CHECK(pts[1].report->method == "generic");

    job.family = Family::orthogonal_plus;
    job.n_min = job.n_max = 8;
    job.qs = {2};
    const auto out = run_sweep(job);
    REQUIRE(out.size() == 1);
    CHECK(out[0].status == PointStatus::error);
}
