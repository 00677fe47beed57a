#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lab/core_arith.hpp"

using namespace lab;

TEST_CASE("primes and characters") {
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(require_odd_prime(2), std::invalid_argument);
    CHECK_THROWS_AS(require_odd_prime(9), std::invalid_argument);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(14, 7) == 0);
    // chi_-1, chi_2, chi_-2 at 3, 5, 7
    CHECK(kronecker_char(-1, 3) == -1);
    CHECK(kronecker_char(2, 3) == -1);
    CHECK(kronecker_char(-2, 3) == 1);
    CHECK(kronecker_char(-1, 5) == 1);
    CHECK(kronecker_char(2, 5) == -1);
    CHECK(kronecker_char(-2, 5) == -1);
    CHECK(kronecker_char(2, 7) == 1);
    CHECK(kronecker_char(-2, 7) == -1);
}

TEST_CASE("character multiplicativity") {
    for (i64 n = 1; n < 200; n += 2) CHECK(kronecker_char(-2, n) == kronecker_char(-1, n) * kronecker_char(2, n));
}

TEST_CASE("Fp arithmetic") {
    Fp a(5, 13), b(9, 13);
    CHECK((a * b).value() == 6);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(a.pow(12).value() == 1);
    CHECK((a - b).value() == 9);
    CHECK_THROWS(Fp(0, 13).inverse());
}

TEST_CASE("Gaussian primes") {
    for (i64 p : {5, 13, 17, 29, 37, 41}) {
        GaussInt pi = gauss_primary_decompose(p);
        CHECK(pi.norm() == p);
        CHECK(pi.re % 2 == 1);
        CHECK(pi.im % 2 == 0);
    }
    CHECK(gauss_primary_decompose(5) == GaussInt{1, 2});
    CHECK_THROWS(gauss_primary_decompose(7));
    CHECK(i_pow(3) == GaussInt{0, -1});
    CHECK(i_pow(-1) == GaussInt{0, -1});
}

TEST_CASE("quarter series") {
    QuarterSeries a(1, 10), b(1, 10);
    a.add_term({1, 0, 0}, 2);
    a.add_term({12, 0, 0}, 5);  // out of range, dropped
    b.add_term({0, 0, 0}, 1);
    b.add_term({4, 0, 0}, GaussInt{0, 1});
    CHECK(a.size() == 1);
    auto s = series_combine(a, b, SeriesOp::add);
    CHECK(s.coeff(4) == GaussInt{0, 1});
    auto m = series_combine(a, b, SeriesOp::mul);
    CHECK(m.coeff(5) == GaussInt{0, 2});
    CHECK(m.coeff(1) == GaussInt{2});
    a.add_term({1, 0, 0}, -2);
    CHECK(a.is_zero());
}

TEST_CASE("series multiplication is commutative and associative (property)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> e(0, 12), c(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        QuarterSeries x(2, 12), y(2, 12), z(2, 12);
        for (auto* s : {&x, &y, &z})
            for (int k = 0; k < 5; ++k) s->add_term({e(rng) / 2, c(rng), e(rng) / 2}, GaussInt{c(rng), c(rng)});
        CHECK(series_combine(x, y, SeriesOp::mul) == series_combine(y, x, SeriesOp::mul));
        CHECK(series_combine(series_combine(x, y, SeriesOp::mul), z, SeriesOp::mul) ==
              series_combine(x, series_combine(y, z, SeriesOp::mul), SeriesOp::mul));
    }
}

TEST_CASE("integer polynomials") {
    auto p = IntPolynomial::from({1, -3}) * IntPolynomial::from({1, 3});
    CHECK(p == IntPolynomial::from({1, 0, -9}));
    CHECK(p.scaled(2) == IntPolynomial::from({1, 0, -36}));
    CHECK((p - p).is_zero());
    // no overflow at degree 21
    IntPolynomial q = IntPolynomial::from({1});
    for (int k = 0; k < 21; ++k) q = q * IntPolynomial::from({1, -1000003});
    CHECK(q.degree() == 21);
    CHECK(q.coeff(21) == boost::multiprecision::pow(BigInt(-1000003), 21));
}
