#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qparity/components.hpp"
#include "qparity/partitions.hpp"

using namespace qparity;

TEST_CASE("vanishing components and support congruences")
{
    const ComponentTable table = build_components(200);
    for (int j : {0, 3, 6, 9}) {
        for (std::int64_t n = 0; n < 200; ++n) {
            CHECK(coefficient(table, j, n) == 0);
        }
    }
    // odd components live on n = -1 mod 24 only
    for (std::int64_t n = 0; n < 200; ++n) {
        if ((n + 1) % 24 != 0) {
            CHECK(coefficient(table, 1, n) == 0);
            CHECK(coefficient(table, 5, n) == 0);
        }
    }
    // even components live on n = 8 mod 12 only, with alternating parity classes
    for (std::int64_t n = 0; n < 200; ++n) {
        if (n < 8 || (n - 8) % 12 != 0) {
            CHECK(coefficient(table, 2, n) == 0);
            CHECK(coefficient(table, 4, n) == 0);
        }
    }
    // index reduction works mod 12
    CHECK(coefficient(table, 13, 23) == coefficient(table, 1, 23));
    CHECK(coefficient(table, -1, 23) == coefficient(table, 11, 23));
    CHECK_THROWS_AS(coefficient(table, 1, 200), std::invalid_argument);
    CHECK_THROWS_AS(build_components(23), std::invalid_argument);
}

TEST_CASE("odd components carry the mock theta f coefficients")
{
    const ComponentTable table = build_components(26 * 24);
    const ZSeries f = mock_f(27);
    for (std::int64_t k = 1; k < 26; ++k) {
        const std::int64_t n = 24 * k - 1;
        const mpz_class a = f[static_cast<std::size_t>(k)];
        CHECK(coefficient(table, 1, n) == a);
        CHECK(coefficient(table, 7, n) == a);
        CHECK(coefficient(table, 5, n) == -a);
        CHECK(coefficient(table, 11, n) == -a);
    }
    CHECK(coefficient(table, 1, 23) == 1);
    CHECK(coefficient(table, 11, 23) == -1);
}

TEST_CASE("even components carry 4 omega with parity-split support")
{
    const ComponentTable table = build_components(40 * 12);
    const ZSeries w = mock_omega(40);
    for (std::int64_t k = 0; k < 39; ++k) {
        const std::int64_t n = 12 * k + 8;
        const mpz_class four_w = 4 * w[static_cast<std::size_t>(k)];
        if (k % 2 == 1) {
            CHECK(coefficient(table, 2, n) == -four_w);
            CHECK(coefficient(table, 10, n) == four_w);
            CHECK(coefficient(table, 4, n) == 0);
            CHECK(coefficient(table, 8, n) == 0);
        } else {
            CHECK(coefficient(table, 4, n) == -four_w);
            CHECK(coefficient(table, 8, n) == four_w);
            CHECK(coefficient(table, 2, n) == 0);
            CHECK(coefficient(table, 10, n) == 0);
        }
    }
    CHECK(coefficient(table, 8, 8) == 4);   // 4 * omega_0
    CHECK(coefficient(table, 4, 8) == -4);
    CHECK(coefficient(table, 2, 20) == -8); // -4 * omega_1
    CHECK(coefficient(table, 10, 20) == 8);
}

TEST_CASE("packet functional collapses to four times f")
{
    const ComponentTable table = build_components(30 * 24);
    const ZSeries f = mock_f(31);
    for (std::int64_t k = 1; k < 30; ++k) {
        CHECK(packet_functional(table, 24 * k - 1) == 4 * f[static_cast<std::size_t>(k)]);
    }
    CHECK(packet_functional(table, 10) == 0);
    CHECK(packet_functional(table, 20) == 0); // even support does not enter
}

TEST_CASE("product exponents read off the component table")
{
    const ComponentTable table = build_components(23 * 9 * 9 + 1);
    const ZSeries f = mock_f(200);
    const ZSeries w = mock_omega(200);
    // d = 23: m odd hits the f components, m even the omega ones
    CHECK(borcherds_exponent(table, 23, 1) == f[1]);       // j = 1, (23+1)/24 = 1
    CHECK(borcherds_exponent(table, 23, 5) == -f[24]);     // j = 5, (575+1)/24 = 24
    CHECK(borcherds_exponent(table, 23, 7) == f[47]);      // j = 7, (1127+1)/24 = 47
    CHECK(borcherds_exponent(table, 23, 2) == -4 * w[7]);  // j = 2, 92 = 12*7+8, k odd
    CHECK(borcherds_exponent(table, 23, 4) == -4 * w[30]); // j = 4, 368 = 12*30+8, k even
}

TEST_CASE("sparse tables cover exactly the requested exponents")
{
    const ComponentTable sparse = build_components_sparse({{23, 12}, {47, 8}});
    const ComponentTable dense = build_components(23 * 11 * 11 + 1);
    for (std::int64_t m = 1; m < 12; ++m) {
        CHECK(borcherds_exponent(sparse, 23, m) == borcherds_exponent(dense, 23, m));
    }
    for (std::int64_t m = 1; m < 8; ++m) {
        CHECK(borcherds_exponent(sparse, 47, m) == borcherds_exponent(dense, 47, m));
    }
    // past the sparse truncation
    CHECK_THROWS_AS(coefficient(sparse, 1, 24 * 1000 - 1), std::invalid_argument);
    // inside the truncation, supported class, but never requested
    CHECK_THROWS_AS(coefficient(sparse, 1, 71), std::invalid_argument);
    // unsupported congruence classes are zero even in sparse mode
    CHECK(coefficient(sparse, 3, 100) == 0);
}
