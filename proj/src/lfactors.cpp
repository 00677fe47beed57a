#include "lab/lfactors.hpp"

#include <stdexcept>

#include "lab/cmform.hpp"
#include "lab/pointcount.hpp"

namespace lab {

namespace {

BigInt big_pow(i64 p, int e) {
    BigInt r = 1;
    for (int k = 0; k < e; ++k) r *= p;
    return r;
}

i64 ipow(i64 p, int e) {
    i64 r = 1;
    for (int k = 0; k < e; ++k) r *= p;
    return r;
}

int char_weight(i64 p) {
    return 7 * kronecker_char(-1, p) + 2 * kronecker_char(2, p) + 2 * kronecker_char(-2, p);
}

}  // namespace

EulerFactor euler_factor(FactorKind kind, i64 p, int twist, int d) {
    require_odd_prime(p);
    if (twist < 0) throw std::invalid_argument("euler_factor: twist >= 0");
    EulerFactor f;
    f.p = p;
    const BigInt pj = big_pow(p, twist);
    switch (kind) {
        case FactorKind::zeta:
            f.poly = IntPolynomial({BigInt(1), BigInt(-pj)});
            f.label = "zeta";
            break;
        case FactorKind::chi:
            if (d != -1 && d != 2 && d != -2) throw std::invalid_argument("euler_factor: d in {-1, 2, -2}");
            f.poly = IntPolynomial({BigInt(1), BigInt(-kronecker_char(d, p) * pj)});
            f.label = "chi_" + std::to_string(d);
            break;
        case FactorKind::g:
            f.poly = IntPolynomial({BigInt(1), BigInt(-a_p(p) * pj),
                                    BigInt(kronecker_char(-1, p) * p * p * pj * pj)});
            f.label = "g";
            break;
    }
    if (twist) f.label += "(s-" + std::to_string(twist) + ")";
    return f;
}

EulerFactor h2_lpoly(i64 p) {
    IntPolynomial r = IntPolynomial::from({1});
    auto times = [&](const EulerFactor& f, int k) {
        for (int i = 0; i < k; ++i) r = r * f.poly;
    };
    times(euler_factor(FactorKind::zeta, p, 1), 8);
    times(euler_factor(FactorKind::chi, p, 1, -1), 7);
    times(euler_factor(FactorKind::chi, p, 1, 2), 2);
    times(euler_factor(FactorKind::chi, p, 1, -2), 2);
    times(euler_factor(FactorKind::g, p, 0), 1);
    return {p, r, "H2"};
}

i64 trace_h2(i64 p) {
    require_odd_prime(p);
    return (8 + char_weight(p)) * p + a_p(p);
}

i64 frobenius_t(i64 p) {
    require_odd_prime(p);
    return (9 + char_weight(p)) * p + a_p(p);
}

i64 lefschetz_prediction(i64 p) {
    const i64 t = frobenius_t(p);
    return 1 + p * p * p + (p + t) + (p * p + p * t);
}

i64 lefschetz_check(i64 p) {
    return count_variety(Variety::Ztilde, p, CountMethod::charsum) - lefschetz_prediction(p);
}

GaussPolynomial ae_quartic(GaussInt l1, GaussInt l2, GaussInt d, int mu, i64 p) {
    if (mu < 1) throw std::invalid_argument("ae_quartic: mu >= 1");
    const GaussInt pm1{ipow(p, mu - 1)}, pm{ipow(p, mu)}, p2m{ipow(p, 2 * mu)};
    return GaussPolynomial({GaussInt{1}, -l1, l1 * l1 - l2 - d * pm1, -(d * l1 * pm), d * d * p2m});
}

SpinCheck spin_identity_check(i64 p) {
    require_odd_prime(p);
    const int mu = 3;
    const i64 a = a_p(p), chi = kronecker_char(-1, p);
    IntPolynomial t = IntPolynomial::from({1, -a, chi * p * p}) * IntPolynomial::from({1, -a * p, chi * ipow(p, 4)});
    SpinCheck r;
    r.p = p;
    r.target = GaussPolynomial::from(t);
    auto c = [&](int k) { return r.target.coeff(k); };

    r.lambda1 = -c(1);
    const i64 pm = ipow(p, mu), p2m = ipow(p, 2 * mu);
    if (!r.lambda1.is_zero()) {
        // T^3: -d l1 p^mu = c3
        GaussInt num = -c(3);
        GaussInt den = r.lambda1 * GaussInt{pm};
        // exact division in Z[i]: num * conj(den) / N(den)
        GaussInt q = num * den.conj();
        i64 n = den.norm();
        if (q.re % n || q.im % n) {
            r.delta_inv = GaussInt{0};
        } else {
            r.delta_inv = GaussInt{q.re / n, q.im / n};
            r.delta_from_t3 = true;
        }
    } else {
        // only d^2 p^{2 mu} = c4 constrains d; take the root equal to chi_-1(p) when it is one
        GaussInt d2 = c(4);
        if (d2.re % p2m || d2.im % p2m) {
            r.delta_inv = GaussInt{0};
        } else {
            GaussInt s{d2.re / p2m, d2.im / p2m};
            GaussInt cand = GaussInt{chi};
            r.delta_inv = cand * cand == s ? cand : (s == GaussInt{-1} ? GaussInt{0, 1} : GaussInt{0});
        }
    }
    // T^2 is the only coefficient containing lambda2
    r.lambda2 = r.lambda1 * r.lambda1 - r.delta_inv * GaussInt{ipow(p, mu - 1)} - c(2);
    r.ae = ae_quartic(r.lambda1, r.lambda2, r.delta_inv, mu, p);
    r.residual = r.target - r.ae;
    return r;
}

}  // namespace lab
