#include "lab/core_arith.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lab {

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_odd_prime(i64 p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

Fp::Fp(i64 value, i64 p) : v_(0), p_(p) {
    require_odd_prime(p);
    v_ = mod(value, p);
}

Fp Fp::operator+(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Fp: modulus mismatch");
    i64 s = v_ + o.v_;
    return Fp(s >= p_ ? s - p_ : s, p_, Raw{});
}

Fp Fp::operator-(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Fp: modulus mismatch");
    i64 s = v_ - o.v_;
    return Fp(s < 0 ? s + p_ : s, p_, Raw{});
}

Fp Fp::operator*(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Fp: modulus mismatch");
    return Fp(static_cast<i64>((static_cast<__int128>(v_) * o.v_) % p_), p_, Raw{});
}

Fp Fp::pow(i64 e) const {
    if (e < 0) return inverse().pow(-e);
    Fp r(1, p_, Raw{}), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    return pow(p_ - 2);
}

int legendre(i64 a, i64 p) {
    require_odd_prime(p);
    i64 r = mod(a, p);
    if (r == 0) return 0;
    // Euler's criterion
    i64 e = Fp(r, p).pow((p - 1) / 2).value();
    return e == 1 ? 1 : -1;
}

int kronecker_char(int d, i64 n) {
    if (n % 2 == 0) throw std::invalid_argument("kronecker_char: n must be odd");
    i64 r = mod(n, 8);
    int m1 = (r % 4 == 1) ? 1 : -1;
    int c2 = (r == 1 || r == 7) ? 1 : -1;
    switch (d) {
        case -1: return m1;
        case 2: return c2;
        case -2: return m1 * c2;
        default: throw std::invalid_argument("kronecker_char: d must be -1, 2 or -2");
    }
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
    return os << "(" << z.re << (z.im < 0 ? "-" : "+") << (z.im < 0 ? -z.im : z.im) << "i)";
}

GaussInt i_pow(i64 k) {
    switch (mod(k, 4)) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

GaussInt gauss_primary_decompose(i64 p) {
    require_odd_prime(p);
    if (p % 4 != 1) throw std::invalid_argument("gauss_primary_decompose: p must be 1 mod 4");
    for (i64 x = 1; x * x < p; x += 2) {
        i64 y2 = p - x * x;
        i64 y = 0;
        while ((y + 1) * (y + 1) <= y2) ++y;
        if (y * y == y2) return {x, y};
    }
    throw std::logic_error("gauss_primary_decompose: no representation found");
}

// ---- QuarterSeries ----

QuarterSeries::QuarterSeries(int genus, int order) : genus_(genus), order_(order) {
    if (genus != 1 && genus != 2) throw std::invalid_argument("QuarterSeries: genus must be 1 or 2");
    if (order < 0) throw std::invalid_argument("QuarterSeries: negative order");
}

QuarterSeries QuarterSeries::one(int genus, int order) {
    QuarterSeries s(genus, order);
    s.add_term({0, 0, 0}, GaussInt(1));
    return s;
}

bool QuarterSeries::in_range(const Key& k) const {
    if (genus_ == 1) return k[1] == 0 && k[2] == 0 && k[0] <= order_;
    return k[0] + k[2] <= order_;
}

void QuarterSeries::add_term(const Key& k, const GaussInt& c) {
    if (!in_range(k) || c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GaussInt QuarterSeries::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GaussInt(0) : it->second;
}

QuarterSeries QuarterSeries::truncated(int order) const {
    QuarterSeries r(genus_, std::min(order, order_));
    for (const auto& [k, c] : terms_) r.add_term(k, c);
    return r;
}

namespace {

struct KeyHash {
    std::size_t operator()(const QuarterSeries::Key& k) const {
        std::uint64_t h = static_cast<std::uint32_t>(k[0]);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(k[1]);
        h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(k[2]);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

}  // namespace

QuarterSeries series_combine(const QuarterSeries& a, const QuarterSeries& b, SeriesOp op, int order) {
    if (a.genus() != b.genus()) throw std::invalid_argument("series_combine: genus mismatch");
    int n = std::min({order, a.order(), b.order()});
    QuarterSeries r(a.genus(), n);
    if (op == SeriesOp::add) {
        for (const auto& [k, c] : a.terms()) r.add_term(k, c);
        for (const auto& [k, c] : b.terms()) r.add_term(k, c);
        return r;
    }
    // exponents are nonnegative in e1, e3, so the bound prunes both loops
    std::unordered_map<QuarterSeries::Key, GaussInt, KeyHash> acc;
    acc.reserve(a.size() * 4 + 16);
    const bool g1 = a.genus() == 1;
    for (const auto& [ka, ca] : a.terms()) {
        int wa = g1 ? ka[0] : ka[0] + ka[2];
        if (wa > n) continue;
        for (const auto& [kb, cb] : b.terms()) {
            int wb = g1 ? kb[0] : kb[0] + kb[2];
            if (wa + wb > n) continue;
            QuarterSeries::Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
            acc[k] += ca * cb;
        }
    }
    for (const auto& [k, c] : acc) r.add_term(k, c);
    return r;
}

QuarterSeries series_combine(const QuarterSeries& a, const QuarterSeries& b, SeriesOp op) {
    return series_combine(a, b, op, std::min(a.order(), b.order()));
}

// ---- IntPolynomial ----

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : c_(std::move(c)) {
    if (c_.empty()) c_.push_back(0);
    trim();
}

IntPolynomial IntPolynomial::from(std::initializer_list<i64> c) {
    std::vector<BigInt> v;
    for (i64 x : c) v.emplace_back(x);
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) + o.coeff(int(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) - o.coeff(int(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const BigInt& s) const {
    std::vector<BigInt> r(c_);
    BigInt f = 1;
    for (auto& x : r) {
        x *= f;
        f *= s;
    }
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0 && c_.size() > 1) continue;
        BigInt c = c_[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << "T";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

// ---- GaussPolynomial ----

GaussPolynomial::GaussPolynomial(std::vector<GaussInt> c) : c_(std::move(c)) {
    if (c_.empty()) c_.push_back(0);
    trim();
}

GaussPolynomial GaussPolynomial::from(const IntPolynomial& p) {
    std::vector<GaussInt> v;
    for (const auto& c : p.coeffs()) v.emplace_back(static_cast<i64>(c));
    return GaussPolynomial(std::move(v));
}

void GaussPolynomial::trim() {
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

GaussInt GaussPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

GaussPolynomial GaussPolynomial::operator-(const GaussPolynomial& o) const {
    std::vector<GaussInt> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) - o.coeff(int(i));
    return GaussPolynomial(std::move(r));
}

std::string GaussPolynomial::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << c_[i] << "T^" << i;
    }
    return os.str();
}

}  // namespace lab
