#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "qparity/report.hpp"

using namespace qparity;

TEST_CASE("full verification pipeline at d = 23")
{
    VerifyOptions vo;
    vo.order = 60;
    const ParityReport r = verify_discriminant(23, vo);
    CHECK(r.d == 23);
    CHECK(r.admissible);
    CHECK(r.h == 3);
    CHECK(r.frob_order == 3);
    CHECK(r.orbit_count == 1);
    CHECK(r.eps_profile == std::vector<int>{1, 1, 1});
    REQUIRE(r.first_odd_m.has_value());
    REQUIRE(r.first_even_m.has_value());
    CHECK(*r.first_odd_m == 1);
    CHECK(*r.first_even_m == 7);
    CHECK(r.odd_bound == 38);   // 12h + 2
    CHECK(r.even_bound == 912); // (12h + 2)(23 + 1)
    CHECK(r.bounds_ok);
    CHECK(r.profile.ord_odd);
    CHECK(r.profile.frob_square);
    CHECK(r.profile.chi_all_plus);
    CHECK(r.profile.primes_1_7);
    CHECK(r.profile.all_agree);
    CHECK(r.lambert_checked_to == 60);
    // the identity holds away from d; multiples of 23 may disagree
    CHECK(r.lambert_mismatches == std::vector<std::int64_t>{23, 46});
    CHECK(r.error.empty());
}

TEST_CASE("lambert stage can be forced off")
{
    VerifyOptions off;
    off.lambert = false;
    const ParityReport r = verify_discriminant(23, off);
    CHECK(r.lambert_checked_to == 0);
    CHECK(r.lambert_mismatches.empty());
}

TEST_CASE("inadmissible discriminants still get the class side")
{
    VerifyOptions off;
    off.lambert = false;
    const ParityReport r = verify_discriminant(95, off);
    CHECK(!r.admissible);
    CHECK(r.h == 8);
    CHECK(!r.profile.primes_1_7); // 5 = 5 mod 8
    CHECK(r.eps_profile.size() == r.h);
    CHECK(r.orbit_count * r.frob_order == r.h);
}

TEST_CASE("standalone parity searches")
{
    ParityBitmap bm;
    CHECK(first_odd(23, bm) == std::optional<std::int64_t>(1));
    CHECK(first_even(23, bm) == std::optional<std::int64_t>(7));
    CHECK(bm.limit > 47);
    CHECK(!bm.bit(47)); // p(47) = 124754 is even

    ParityBitmap tiny;
    CHECK(!first_odd(23, tiny, 0).has_value()); // cap reached before any hit
    CHECK_THROWS_AS(first_odd(24, bm), std::invalid_argument);
}

TEST_CASE("scan enumerates and verifies every eligible discriminant")
{
    ScanOptions so;
    so.verify.order = 60;
    const std::vector<ParityReport> reports = scan(200, so);

    std::vector<std::int64_t> ds;
    for (const auto &rep : reports) {
        ds.push_back(rep.d);
        CHECK(rep.error.empty());
        CHECK(rep.bounds_ok);
        for (std::int64_t n : rep.lambert_mismatches) {
            CHECK(n % rep.d == 0);
        }
    }
    CHECK(ds == std::vector<std::int64_t>{23, 47, 71, 95, 119, 143, 167, 191});
    CHECK(reports[1].h == 5);
    CHECK(reports[1].lambert_checked_to == 60); // 47 runs Lambert by default
    CHECK(reports[3].lambert_checked_to == 0);  // 95 does not

    // shared-bitmap path agrees with a standalone run
    VerifyOptions vo;
    vo.order = 60;
    const ParityReport alone = verify_discriminant(23, vo);
    CHECK(reports[0].first_odd_m == alone.first_odd_m);
    CHECK(reports[0].first_even_m == alone.first_even_m);
    CHECK(reports[0].lambert_mismatches == alone.lambert_mismatches);

    SUBCASE("worker threads do not change the output")
    {
        ScanOptions threaded = so;
        threaded.jobs = 3;
        const std::vector<ParityReport> again = scan(200, threaded);
        REQUIRE(again.size() == reports.size());
        for (std::size_t i = 0; i < reports.size(); ++i) {
            CHECK(report_to_json(again[i]) == report_to_json(reports[i]));
        }
    }

    SUBCASE("json roundtrip is lossless")
    {
        for (const auto &rep : reports) {
            const nlohmann::json j = report_to_json(rep);
            CHECK(report_to_json(report_from_json(j)) == j);
        }
        ParityReport broken;
        broken.d = 119;
        broken.error = "stage demo: boom";
        CHECK(report_from_json(report_to_json(broken)).error == broken.error);
    }

    SUBCASE("csv has a header plus one row per report")
    {
        const std::string csv = reports_to_csv(reports);
        CHECK(csv.rfind("d,admissible,h,", 0) == 0);
        std::size_t lines = 0;
        for (char c : csv) {
            lines += c == '\n';
        }
        CHECK(lines == reports.size() + 1);
    }
}
