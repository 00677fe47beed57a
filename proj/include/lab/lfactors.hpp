#pragma once

#include <string>

#include "lab/core_arith.hpp"

namespace lab {

// local factors in T = p^{-s}; a shift s -> s - j is T -> p^j T
struct EulerFactor {
    i64 p = 0;
    IntPolynomial poly;
    std::string label;
};

enum class FactorKind { zeta, chi, g };

// chi needs d in {-1, 2, -2}
EulerFactor euler_factor(FactorKind kind, i64 p, int twist, int d = 0);

// zeta(s-1)^8 L(s-1,chi_-1)^7 L(s-1,chi_2)^2 L(s-1,chi_-2)^2 L(s,g) at p
EulerFactor h2_lpoly(i64 p);
// (8 + 7 chi_-1 + 2 chi_2 + 2 chi_-2) p + a_p
i64 trace_h2(i64 p);
// (9 + 7 chi_-1 + 2 chi_2 + 2 chi_-2) p + a_p
i64 frobenius_t(i64 p);

// measured |Ztilde(F_p)| - (1 + p^3 + (p + t) + (p^2 + p t))
i64 lefschetz_check(i64 p);
i64 lefschetz_prediction(i64 p);

inline int ae_mu(int k1, int k2) { return k1 + k2 - 3; }

// 1 - l1 T + (l1^2 - l2 - d p^{mu-1}) T^2 - d l1 p^mu T^3 + d^2 p^{2 mu} T^4
GaussPolynomial ae_quartic(GaussInt lambda1, GaussInt lambda2, GaussInt delta_inv, int mu, i64 p);

struct SpinCheck {
    i64 p = 0;
    GaussInt lambda1, lambda2, delta_inv;
    bool delta_from_t3 = false;  // false: a_p = 0, delta fixed up to sign by T^4 alone
    GaussPolynomial target;
    GaussPolynomial ae;
    GaussPolynomial residual;  // target - ae
    bool ok() const { return residual.is_zero(); }
};
// target (1 - a_p T + chi p^2 T^2)(1 - a_p p T + chi p^4 T^2), mu = 3
SpinCheck spin_identity_check(i64 p);

}  // namespace lab
