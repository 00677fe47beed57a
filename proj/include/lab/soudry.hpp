#pragma once

#include <array>
#include <string>
#include <vector>

#include "lab/theta.hpp"

namespace lab {

// z1 in (1+i)/2 + Z[i], z2 in Z[i]:
//   h_i(tau) = sum (i/2)(-1)^{x1+y1+x2} conj(z1)^{2-i} conj(z2)^i exp(pi i (tau1 N(z1) + 2 tau2 Re(z1 conj z2) + tau3 N(z2)))
// paired with the 2-form h0 dtau1^dtau2 + h1 dtau1^dtau3 + h2 dtau2^dtau3
using EZValue = std::array<cplx, 3>;

std::string ez_convention();

// radius2 <= 0 picks the tail-bound radius for tol
EZValue ez_eval(const CMat& tau, double tol, double radius2 = 0);

// coefficients of g^*(E^#) on dtau1^dtau2, dtau1^dtau3, dtau2^dtau3 at tau
EZValue ez_pullback(const IntMat& g, const CMat& tau, double tol);
// max_k |pullback_k - h_k(tau)| / max_k |h_k(tau)|
double ez_two_form_check(const IntMat& g, const CMat& tau, double tol);

struct PhiMatch {
    int order = 0;             // bound on the exponent of exp(pi i tau1 / 4)
    int terms = 0;             // nonzero coefficients compared
    int leading_exponent = 0;  // first nonzero exponent of the stratum, in exp(pi i tau1 / 4)
    cplx scalar;               // stratum = scalar * phi_after_g0(F_Z)
    double residual = 0;
    bool support_ok = false;   // exponents 2n with n = 1 mod 4 only
};
// z2 = 0 stratum of h0 against phi_after_g0(F_Z); grows the order until `terms` nonzero coefficients exist
PhiMatch ez_phi_match(int terms, double tol);
// 8 times the z2 = 0 stratum of h0, exact, genus 1 in exp(pi i tau1 / 4)
QuarterSeries ez_stratum8(int order);

// three points with Im tau >= 1.5 I
std::vector<CMat> ez_sample_points();
// n distinct random Gamma(4,8) words with C != 0 whose images of every sample point keep Im >= min_eig
std::vector<IntMat> gamma48_samples(int n, std::uint64_t seed, double min_eig = 0.004);

}  // namespace lab
