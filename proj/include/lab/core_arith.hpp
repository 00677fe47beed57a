#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lab {

using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

bool is_prime(i64 n);
// throws std::invalid_argument unless p is an odd prime
void require_odd_prime(i64 p);

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

class Fp {
public:
    Fp(i64 value, i64 p);
    i64 value() const { return v_; }
    i64 modulus() const { return p_; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const { return Fp(p_ - v_, p_); }
    Fp pow(i64 e) const;
    Fp inverse() const;
    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }

private:
    struct Raw {};
    Fp(i64 v, i64 p, Raw) : v_(v), p_(p) {}
    i64 v_;
    i64 p_;
};

int legendre(i64 a, i64 p);
// d in {-1, 2, -2}, n odd
int kronecker_char(int d, i64 n);

struct GaussInt {
    i64 re = 0;
    i64 im = 0;

    GaussInt() = default;
    constexpr GaussInt(i64 r, i64 i = 0) : re(r), im(i) {}

    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator-() const { return {-re, -im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt& operator+=(const GaussInt& o) { re += o.re; im += o.im; return *this; }
    GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }
    bool operator==(const GaussInt& o) const = default;

    GaussInt conj() const { return {re, -im}; }
    i64 norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

std::ostream& operator<<(std::ostream& os, const GaussInt& z);
// i^k
GaussInt i_pow(i64 k);

// p = 1 mod 4 -> pi = x + yi with x odd, y even, x > 0, y > 0 (so pi = x + yi, norm p)
GaussInt gauss_primary_decompose(i64 p);

// Truncated Fourier series in the unit exp(pi i tau / 4).
// genus 1: key {e, 0, 0}, e <= order
// genus 2: key {e1, e2, e3} for exp(pi i (e1 t1 + e2 t2 + e3 t3)/4), e1 + e3 <= order
class QuarterSeries {
public:
    using Key = std::array<int, 3>;

    QuarterSeries(int genus, int order);
    static QuarterSeries one(int genus, int order);

    int genus() const { return genus_; }
    int order() const { return order_; }
    bool in_range(const Key& k) const;

    void add_term(const Key& k, const GaussInt& c);
    GaussInt coeff(const Key& k) const;
    GaussInt coeff(int e) const { return coeff(Key{e, 0, 0}); }
    const std::map<Key, GaussInt>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    QuarterSeries truncated(int order) const;
    bool operator==(const QuarterSeries& o) const {
        return genus_ == o.genus_ && order_ == o.order_ && terms_ == o.terms_;
    }

private:
    int genus_;
    int order_;
    std::map<Key, GaussInt> terms_;
};

enum class SeriesOp { add, mul };
QuarterSeries series_combine(const QuarterSeries& a, const QuarterSeries& b, SeriesOp op, int order);
QuarterSeries series_combine(const QuarterSeries& a, const QuarterSeries& b, SeriesOp op);

// Dense polynomial in T with arbitrary precision integer coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::vector<BigInt> c);
    static IntPolynomial from(std::initializer_list<i64> c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }

    // T -> s T
    IntPolynomial scaled(const BigInt& s) const;
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> c_{BigInt(0)};
};

// Polynomial over Z[i]; used where the coefficients may involve a 4th root of unity.
class GaussPolynomial {
public:
    GaussPolynomial() = default;
    explicit GaussPolynomial(std::vector<GaussInt> c);
    static GaussPolynomial from(const IntPolynomial& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    GaussInt coeff(int k) const;
    const std::vector<GaussInt>& coeffs() const { return c_; }
    GaussPolynomial operator-(const GaussPolynomial& o) const;
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    std::string str() const;

private:
    void trim();
    std::vector<GaussInt> c_{GaussInt(0)};
};

}  // namespace lab
