#include "lab/cmform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "lab/theta.hpp"

namespace lab {

std::string gsource_name(GSource s) {
    switch (s) {
        case GSource::theta_product: return "theta_product";
        case GSource::gauss_sum: return "gauss_sum";
        case GSource::hecke_character: return "hecke_character";
    }
    return "?";
}

std::string gauss_sign_name(GaussSign s) {
    switch (s) {
        case GaussSign::i_pow: return "i^(x+y)";
        case GaussSign::floor_half: return "(-1)^floor((x+y)/2)";
        case GaussSign::parity: return "(-1)^(x+y)";
    }
    return "?";
}

namespace {

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// theta_00^2 theta_01^2 theta_10^2 (tau) = 4 g(tau/4): exponent 2n in exp(pi i tau/4) carries 4 a_n.
// Going through rescale4 turns that into exponent 8n of the f(4 tau) series.
EllipticQExpansion from_theta_product(int order) {
    std::vector<Characteristic> ms;
    for (auto [a, b] : {std::pair{0, 0}, {0, 0}, {0, 1}, {0, 1}, {1, 0}, {1, 0}})
        ms.emplace_back(std::vector<int>{a}, std::vector<int>{b});
    QuarterSeries prod = rescale4(product_expansion(ms, 2 * order));
    EllipticQExpansion g;
    g.order = order;
    g.source = gsource_name(GSource::theta_product);
    g.a.assign(order + 1, GaussInt{});
    for (const auto& [k, c] : prod.terms()) {
        if (k[0] % 8) throw std::logic_error("theta product: exponent not a multiple of 8");
        int n = k[0] / 8;
        if (n > order) continue;
        if (c.re % 4 || c.im % 4) throw std::logic_error("theta product: coefficient not divisible by 4");
        g.a[n] = GaussInt{c.re / 4, c.im / 4};
    }
    return g;
}

EllipticQExpansion from_hecke(int order) {
    EllipticQExpansion g;
    g.order = order;
    g.source = gsource_name(GSource::hecke_character);
    std::vector<i64> a(order + 1, 0);
    if (order >= 1) a[1] = 1;
    // prime powers first, then multiplicativity via smallest prime factor
    std::vector<int> spf(order + 1, 0);
    for (int i = 2; i <= order; ++i)
        if (!spf[i])
            for (int j = i; j <= order; j += i)
                if (!spf[j]) spf[j] = i;
    for (int n = 2; n <= order; ++n) {
        int p = spf[n], m = n, k = 0;
        while (m % p == 0) m /= p, ++k;
        if (m > 1) {
            a[n] = a[m] * a[n / m];
            continue;
        }
        if (p == 2) {
            a[n] = 0;
            continue;
        }
        // a_{p^k} = a_p a_{p^{k-1}} - chi(p) p^2 a_{p^{k-2}}
        i64 ap = a_p(p);
        if (k == 1) {
            a[n] = ap;
        } else {
            i64 prev = a[n / p], prev2 = a[n / p / p];
            a[n] = ap * prev - kronecker_char(-1, p) * i64(p) * p * prev2;
        }
    }
    g.a.assign(order + 1, GaussInt{});
    for (int n = 0; n <= order; ++n) g.a[n] = GaussInt{a[n]};
    return g;
}

}  // namespace

std::vector<GaussInt> gauss_sum_numerators(GaussSign sign, int order) {
    if (order < 1) throw std::invalid_argument("gauss_sum_numerators: order >= 1");
    // x = X/2, y = Y/2 with X, Y odd; exp(pi i (x^2+y^2) tau) = q^{n/4} at tau -> tau/4 gives n = (X^2+Y^2)/2
    // (i/2)(i x + y)^2 = i (i X + Y)^2 / 8
    std::vector<GaussInt> out(order + 1, GaussInt{});
    const i64 lim = static_cast<i64>(std::sqrt(2.0 * order)) + 2;
    for (i64 X = -lim; X <= lim; ++X) {
        if (X % 2 == 0) continue;
        for (i64 Y = -lim; Y <= lim; ++Y) {
            if (Y % 2 == 0) continue;
            i64 n = (X * X + Y * Y) / 2;
            if (n > order) continue;
            i64 s = (X + Y) / 2;  // x + y
            GaussInt sg;
            switch (sign) {
                case GaussSign::i_pow: sg = i_pow(s); break;
                case GaussSign::floor_half: sg = GaussInt{floor_div(s, 2) % 2 ? -1 : 1}; break;
                case GaussSign::parity: sg = GaussInt{s % 2 ? -1 : 1}; break;
            }
            GaussInt z{Y, X};
            out[n] += GaussInt{0, 1} * z * z * sg;
        }
    }
    return out;
}

namespace {

EllipticQExpansion from_gauss_sum(GaussSign sign, int order) {
    auto num = gauss_sum_numerators(sign, order);
    EllipticQExpansion g;
    g.order = order;
    g.source = gsource_name(GSource::gauss_sum);
    g.a.assign(order + 1, GaussInt{});
    for (int n = 0; n <= order; ++n) {
        if (num[n].re % 8 || num[n].im % 8)
            throw std::domain_error("gauss sum: non-integral coefficient under sign " + gauss_sign_name(sign));
        g.a[n] = GaussInt{num[n].re / 8, num[n].im / 8};
    }
    return g;
}

}  // namespace

GaussSign resolve_gauss_sign(int order) {
    static std::mutex mu;
    static std::map<int, GaussSign> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
    auto ref = from_theta_product(order);
    for (auto s : {GaussSign::i_pow, GaussSign::floor_half, GaussSign::parity}) {
        auto num = gauss_sum_numerators(s, order);
        bool ok = true;
        for (int n = 0; n <= order && ok; ++n) ok = num[n] == ref.a[n] * GaussInt{8};
        if (ok) return cache[order] = s;
    }
    throw std::logic_error("resolve_gauss_sign: no reading reproduces the theta product");
}

EllipticQExpansion g_expansion(GSource source, int order) {
    if (order < 1) throw std::invalid_argument("g_expansion: order >= 1");
    switch (source) {
        case GSource::theta_product: return from_theta_product(order);
        case GSource::gauss_sum: return from_gauss_sum(resolve_gauss_sign(std::min(order, 200)), order);
        case GSource::hecke_character: return from_hecke(order);
    }
    throw std::logic_error("g_expansion: unknown source");
}

i64 a_p(i64 p) {
    require_odd_prime(p);
    if (p % 4 == 3) return 0;
    GaussInt pi = gauss_primary_decompose(p);
    return 2 * (pi.re * pi.re - pi.im * pi.im);
}

std::vector<GaussInt> hecke_Tp_check(const EllipticQExpansion& g, i64 p, int order) {
    require_odd_prime(p);
    if (p * order > g.order)
        throw std::out_of_range("hecke_Tp_check: need expansion to order " + std::to_string(p * order));
    const i64 ap = a_p(p);
    const i64 w = kronecker_char(-1, p) * p * p;
    std::vector<GaussInt> r(order + 1, GaussInt{});
    for (int n = 0; n <= order; ++n) {
        GaussInt t = g.a[n * p];
        if (n % p == 0) t += GaussInt{w} * g.a[n / p];
        r[n] = t - GaussInt{ap} * g.a[n];
    }
    return r;
}

std::vector<std::pair<int, GaussInt>> coefficient_table(const EllipticQExpansion& g) {
    std::vector<std::pair<int, GaussInt>> out;
    for (int n = 0; n <= g.order; ++n)
        if (!g.a[n].is_zero()) out.emplace_back(n, g.a[n]);
    return out;
}

}  // namespace lab
