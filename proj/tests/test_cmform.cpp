#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "lab/cmform.hpp"

using namespace lab;

// eta(4 tau)^6 from the product formula, computed independently
const std::map<int, i64> kEta6{{1, 1},    {5, -6},   {9, 9},     {13, 10},  {17, -30}, {25, 11},
                               {29, 42},  {37, -70}, {41, 18},   {45, -54}, {49, 49},  {53, 90},
                               {61, -22}, {65, -60}, {73, -110}, {81, 81},  {85, 180}, {89, -78},
                               {97, 130}, {101, -198}, {109, -182}, {113, -30}, {117, 90}};

TEST_CASE("theta product against eta product") {
    auto g = g_expansion(GSource::theta_product, 120);
    for (int n = 0; n <= 120; ++n) {
        auto it = kEta6.find(n);
        CAPTURE(n);
        CHECK(g[n] == GaussInt{it == kEta6.end() ? 0 : it->second});
    }
}

TEST_CASE("three constructions agree") {
    auto t = g_expansion(GSource::theta_product, 200);
    CHECK(t == g_expansion(GSource::gauss_sum, 200));
    CHECK(t == g_expansion(GSource::hecke_character, 200));
    CHECK(t[1] == GaussInt{1});
    for (int n = 0; n <= 200; n += 2) CHECK(t[n].is_zero());
    for (int n = 0; n <= 200; ++n)
        if (n % 4 != 1) CHECK(t[n].is_zero());
}

TEST_CASE("sign readings") {
    CHECK(resolve_gauss_sign() == GaussSign::parity);
    auto t = g_expansion(GSource::theta_product, 60);
    // both printed readings give half the chi_2 twist
    for (auto s : {GaussSign::i_pow, GaussSign::floor_half}) {
        auto num = gauss_sum_numerators(s, 60);
        for (int n = 1; n <= 60; n += 2) CHECK(num[n] == t[n] * GaussInt{4 * kronecker_char(2, n)});
    }
}

TEST_CASE("a_p") {
    CHECK(a_p(3) == 0);
    CHECK(a_p(7) == 0);
    CHECK(a_p(5) == -6);
    CHECK(a_p(13) == 10);
    CHECK(a_p(17) == -30);
    CHECK_THROWS(a_p(2));
    CHECK_THROWS(a_p(15));
    for (i64 p = 3; p < 400; p += 2) {
        if (!is_prime(p)) continue;
        CHECK(std::abs(a_p(p)) <= 2 * p);
        if (p % 4 == 3) CHECK(a_p(p) == 0);
    }
}

TEST_CASE("Hecke eigenform") {
    auto g = g_expansion(GSource::theta_product, 47 * 200);
    for (i64 p = 3; p <= 50; p += 2) {
        if (!is_prime(p)) continue;
        CAPTURE(p);
        for (const auto& c : hecke_Tp_check(g, p, 200)) CHECK(c.is_zero());
    }
    CHECK_THROWS_AS(hecke_Tp_check(g, 53, 200), std::out_of_range);
}

TEST_CASE("multiplicativity (property)") {
    auto g = g_expansion(GSource::theta_product, 10000);
    for (int m = 1; m <= 100; m += 2)
        for (int n = 1; n <= 100; n += 2)
            if (std::gcd(m, n) == 1) CHECK(g[m * n] == g[m] * g[n]);
}

TEST_CASE("coefficient table") {
    auto g = g_expansion(GSource::hecke_character, 20);
    auto tab = coefficient_table(g);
    REQUIRE(tab.size() == 5);
    CHECK(tab[1] == std::pair{5, GaussInt{-6}});
}
