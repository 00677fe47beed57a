#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lab/core_arith.hpp"

namespace lab {

// q-expansion of an elliptic form, q = exp(2 pi i tau); a[n] for 0 <= n <= order
struct EllipticQExpansion {
    int order = 0;
    std::vector<GaussInt> a;
    std::string source;

    GaussInt operator[](int n) const { return a.at(n); }
    bool operator==(const EllipticQExpansion& o) const { return order == o.order && a == o.a; }
};

enum class GSource { theta_product, gauss_sum, hecke_character };
std::string gsource_name(GSource s);

// Readings of the sign in the lattice-sum display for g(tau/4), x, y in 1/2 + Z:
//   i_pow:      i^{x+y}
//   floor_half: (-1)^{floor((x+y)/2)}
//   parity:     (-1)^{x+y}
enum class GaussSign { i_pow, floor_half, parity };
std::string gauss_sign_name(GaussSign s);

EllipticQExpansion g_expansion(GSource source, int order);

// 8 * (lattice sum), exact; index n of q^n.  Dividing by 8 is exact only for the adopted sign.
std::vector<GaussInt> gauss_sum_numerators(GaussSign sign, int order);
// the first reading that reproduces the theta-product series, checked to `order`
GaussSign resolve_gauss_sign(int order = 200);

// a_p for odd p: 0 if p = 3 mod 4, else 2(x^2 - y^2) with p = x^2 + y^2, x odd
i64 a_p(i64 p);

// T_p g - a_p g for n <= order; throws std::out_of_range if p * order exceeds g.order
std::vector<GaussInt> hecke_Tp_check(const EllipticQExpansion& g, i64 p, int order);

// nonzero coefficients as (n, a_n)
std::vector<std::pair<int, GaussInt>> coefficient_table(const EllipticQExpansion& g);

}  // namespace lab
