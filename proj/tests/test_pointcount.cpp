#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "lab/cmform.hpp"
#include "lab/pointcount.hpp"

using namespace lab;

// brute force enumeration in an independent script
struct Oracle {
    i64 F, C, cone, u1c, z, u2c;
};
const std::map<i64, Oracle> kOracle{
    {3, {16, 4, 49, 21, 40, 12}},
    {5, {80, 8, 401, 233, 332, 164}},
    {7, {64, 8, 449, 77, -1, -1}},
    {11, {144, 12, -1, -1, -1, -1}},
    {13, {336, 8, -1, -1, -1, -1}},
};

TEST_CASE("frozen counts") {
    for (const auto& [p, o] : kOracle) {
        CAPTURE(p);
        CHECK(count_variety(Variety::FermatSurface, p, CountMethod::naive) == o.F);
        CHECK(count_variety(Variety::FermatSurface, p, CountMethod::charsum) == o.F);
        CHECK(count_variety(Variety::FermatCurve, p, CountMethod::charsum) == o.C);
        CHECK(count_variety(Variety::FermatCurve, p, CountMethod::naive) == o.C);
        if (o.cone >= 0) {
            CHECK(count_variety(Variety::ConeF, p, CountMethod::naive) == o.cone);
            CHECK(count_variety(Variety::U1c, p, CountMethod::naive) == o.u1c);
        }
        if (o.z >= 0) {
            CHECK(count_variety(Variety::Zsatake, p, CountMethod::naive) == o.z);
            CHECK(count_variety(Variety::U2c, p, CountMethod::naive) == o.u2c);
        }
    }
}

TEST_CASE("naive and character-sum counts agree") {
    for (i64 p : {3, 5, 7}) {
        CAPTURE(p);
        for (auto v : {Variety::ConeF, Variety::Zsatake, Variety::U2c, Variety::Ztilde})
            CHECK(count_variety(v, p, CountMethod::naive) == count_variety(v, p, CountMethod::charsum));
    }
}

TEST_CASE("formulas in terms of |F|") {
    for (i64 p : {3, 5, 7, 11, 13}) {
        CAPTURE(p);
        for (const auto& r : verify_count_formulas(p, a_p(p))) {
            CAPTURE(r.label);
            CHECK(r.residual == 0);
        }
    }
}

TEST_CASE("Fermat formula") {
    CHECK(fermat_corrected(3, 0) == 16);
    CHECK(fermat_printed(3, 0) == 6);
    CHECK(measured_frobenius_trace(3) == 0);
    CHECK(measured_frobenius_trace(5) == -6);
    CHECK(measured_frobenius_trace(13) == 10);
    // vanishes at inert primes
    for (i64 p : {3, 7, 11, 19, 23}) CHECK(measured_frobenius_trace(p) == 0);
}

TEST_CASE("L-tilde is a copy of F") {
    for (i64 p : {3, 5, 7, 11})
        CHECK(count_variety(Variety::LTilde, p, CountMethod::naive) ==
              count_variety(Variety::FermatSurface, p, CountMethod::charsum));
}

TEST_CASE("Z with X0 = 0") {
    for (i64 p : {3, 5, 7, 11, 13}) {
        i64 chi = kronecker_char(-1, p);
        CHECK(count_z_x0_zero(p) == 2 * p * p - p + 2 + (2 * p * p - 2 * p) * chi);
    }
}

TEST_CASE("birational map") {
    for (i64 p : {3, 5, 7, 13}) {
        auto r = verify_birational_map(p);
        CAPTURE(p);
        CHECK(r.ok());
        CHECK(r.identity_matches);
        CHECK(r.u1 > 0);
    }
}

TEST_CASE("boundary lines") {
    auto r5 = verify_boundary_lines(5);
    CHECK(r5.sqrt_minus_one);
    CHECK(r5.lines.size() == 30);
    CHECK(r5.ok());
    auto r3 = verify_boundary_lines(3);
    CHECK_FALSE(r3.sqrt_minus_one);
    CHECK(r3.lines.size() == 18);
    CHECK(r3.ok());
    const i64 X[4] = {1, 2, 3, 4};
    CHECK(boundary_quadric(0, X, 101) == 30);
    CHECK(boundary_quadric(9, X, 101) == mod(2 * (4 - 6), 101));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(count_variety(Variety::FermatSurface, 4, CountMethod::naive), std::invalid_argument);
    CHECK_THROWS_AS(count_variety(Variety::FermatSurface, 2, CountMethod::naive), std::invalid_argument);
    CHECK_THROWS_AS(count_variety(Variety::Zsatake, 11, CountMethod::naive), std::invalid_argument);
    CHECK_THROWS_AS(count_variety(Variety::FermatSurface, 67, CountMethod::charsum), std::invalid_argument);
    CHECK(variety_from_name("Ztilde") == Variety::Ztilde);
    CHECK_FALSE(variety_from_name("nope").has_value());
}
