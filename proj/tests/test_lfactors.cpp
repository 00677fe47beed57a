#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lab/cmform.hpp"
#include "lab/lfactors.hpp"

using namespace lab;

TEST_CASE("Euler factors") {
    CHECK(euler_factor(FactorKind::chi, 5, 1, -1).poly == IntPolynomial::from({1, -5}));
    CHECK(euler_factor(FactorKind::g, 3, 0).poly == IntPolynomial::from({1, 0, -9}));
    CHECK(euler_factor(FactorKind::zeta, 7, 0).poly == IntPolynomial::from({1, -1}));
    CHECK(euler_factor(FactorKind::g, 5, 0).poly == IntPolynomial::from({1, 6, 25}));
    CHECK_THROWS(euler_factor(FactorKind::chi, 5, 0, 3));
}

TEST_CASE("twist is T -> p^j T (property)") {
    for (i64 p : {3, 5, 7, 11, 13, 17}) {
        BigInt pj = 1;
        for (int j = 0; j < 4; ++j, pj *= p) {
            CHECK(euler_factor(FactorKind::g, p, j).poly == euler_factor(FactorKind::g, p, 0).poly.scaled(pj));
            CHECK(euler_factor(FactorKind::zeta, p, j).poly == euler_factor(FactorKind::zeta, p, 0).poly.scaled(pj));
            for (int d : {-1, 2, -2})
                CHECK(euler_factor(FactorKind::chi, p, j, d).poly ==
                      euler_factor(FactorKind::chi, p, 0, d).poly.scaled(pj));
        }
    }
}

TEST_CASE("H^2 polynomial") {
    CHECK(trace_h2(3) == 3);
    CHECK(trace_h2(5) == 55 + a_p(5));
    for (i64 p : {3, 5, 7, 11, 13, 29}) {
        auto h = h2_lpoly(p);
        CHECK(h.poly.degree() == 21);
        CHECK(h.poly.coeff(1) == BigInt(-trace_h2(p)));
        CHECK(h.poly.coeff(0) == 1);
    }
}

TEST_CASE("Lefschetz") {
    CHECK(lefschetz_prediction(3) == 64);
    for (i64 p : {3, 5, 7, 11, 13}) CHECK(lefschetz_check(p) == 0);
}

TEST_CASE("AE quartic") {
    CHECK(ae_mu(3, 3) == 3);
    CHECK(ae_mu(3, 1) == 1);
    auto q = ae_quartic(0, 0, 1, 3, 5);
    CHECK(q.coeff(0) == GaussInt{1});
    CHECK(q.coeff(1) == GaussInt{0});
    CHECK(q.coeff(2) == GaussInt{-25});
    CHECK(q.coeff(3) == GaussInt{0});
    CHECK(q.coeff(4) == GaussInt{15625});
}

TEST_CASE("spin identity") {
    auto s3 = spin_identity_check(3);
    CHECK(s3.ok());
    CHECK(s3.lambda1 == GaussInt{0});
    for (i64 p = 3; p <= 50; p += 2) {
        if (!is_prime(p)) continue;
        auto s = spin_identity_check(p);
        CAPTURE(p);
        CHECK(s.ok());
        CHECK(s.lambda1 == GaussInt{a_p(p) * (1 + p)});
        CHECK(s.delta_inv == GaussInt{kronecker_char(-1, p)});
        if (p % 4 == 1) CHECK(s.delta_from_t3);
    }
}
