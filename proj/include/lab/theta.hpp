#pragma once

#include <complex>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lab/core_arith.hpp"

namespace lab {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using IntMat = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;

// m = (m', m'') with entries in {0,1}; genus 1..3.  Integer entries outside {0,1} are allowed
// transiently (unreduced action output) and handled by reduced().
struct Characteristic {
    int g = 2;
    std::vector<int> top;  // m'
    std::vector<int> bot;  // m''

    Characteristic() = default;
    Characteristic(std::vector<int> mp, std::vector<int> mpp);
    // genus 2 from the 4-bit string "abcd" or the integer a<<3|b<<2|c<<1|d
    static Characteristic parse(const std::string& s);
    static Characteristic from_code(int code);

    int code() const;  // genus 2 only
    std::string str() const;
    bool even() const;
    Characteristic reduced() const;
    bool operator==(const Characteristic& o) const = default;
    bool operator<(const Characteristic& o) const { return std::tie(top, bot) < std::tie(o.top, o.bot); }
};

enum class Parity { even, odd };
Parity parity(const Characteristic& m);
std::vector<Characteristic> even_characteristics();  // genus 2, ascending code

// ---- symplectic matrices ----
struct Blocks {
    IntMat A, B, C, D;
};
Blocks blocks(const IntMat& M);
IntMat from_blocks(const IntMat& A, const IntMat& B, const IntMat& C, const IntMat& D);
bool is_symplectic(const IntMat& M);
IntMat sp_inverse(const IntMat& M);
IntMat identity_sp(int g);
bool in_gamma2(const IntMat& M);
bool in_gamma4(const IntMat& M);
bool in_gamma24(const IntMat& M);
bool in_gamma48(const IntMat& M);

// Generators e1..e10 of Gamma(2)/Gamma(4,8).  generator(i) is the printed matrix
// (e9 = e7^t, e10 = e8^t); table_generator(i) replaces e9, e10 by their inverses, which is
// the convention under which the character table holds.
IntMat generator(int i);
IntMat table_generator(int i);
IntMat j_matrix(int g);
std::vector<IntMat> gammaZ_generators();
std::vector<std::string> gammaZ_generator_names();
// generators of Gamma(4,8): unipotents with 8 E11, 8 E22, 4(E12 + E21) in B or C, and diag(A, A^-t)
std::vector<IntMat> gamma48_generators();
// random word of the given length in gens and their inverses
IntMat random_word(const std::vector<IntMat>& gens, int length, std::mt19937_64& rng);
// genus 2 -> genus 3 block embedding acting on coordinates {0,1} and leaving the third fixed
IntMat embed_genus3(const IntMat& M);

bool is_siegel_point(const CMat& tau);
void require_siegel_point(const CMat& tau);
// (M tau, det(C tau + D))
std::pair<CMat, cplx> act(const IntMat& M, const CMat& tau);

// ---- exact expansions ----
QuarterSeries theta_expansion(const Characteristic& m, int order);
QuarterSeries product_expansion(const std::vector<Characteristic>& ms, int order);
// genus 1 in u = exp(pi i tau/4); genus 2 in exp(pi i tau_j / 4)
cplx evaluate_series(const QuarterSeries& s, const CMat& tau);

// ---- numerics ----
cplx theta_eval(const Characteristic& m, const CMat& tau, double tol);
cplx theta_product_eval(const std::vector<Characteristic>& ms, const CMat& tau, double tol);

// ---- transformation machinery ----
struct ActionResult {
    Characteristic image;     // M.m reduced mod 2
    Characteristic unreduced; // M.m before reduction
    int phase8 = 0;           // 8 * phi_m(M) mod 8
};
ActionResult characteristic_action(const IntMat& M, const Characteristic& m);
int kappa2(const IntMat& M);  // +-1, M in Gamma(2)

// residual of theta_{M.m}(M tau)^2 = kappa^2 e^{4 pi i phi} det(C tau + D) theta_m(tau)^2, relative
double igusa_squared_residual(const Characteristic& m, const IntMat& M, const CMat& tau, double tol);

// closed-form character-table value as i^k, summed over the tuple
GaussInt table1_char(const std::vector<Characteristic>& ms, int i);
GaussInt table1_char(const Characteristic& m1, const Characteristic& m2, int i);
// numeric prod theta_mj | [M] / prod theta_mj  (weight = len/2)
cplx slash_ratio(const std::vector<Characteristic>& ms, const IntMat& M, const CMat& tau, double tol);
// max over characteristics of the squared-law residual, and, when expected != nullptr,
// |slash_ratio - expected|.  Odd characteristics are rejected.
double verify_igusa_transformation(const std::vector<Characteristic>& ms, const IntMat& M, const CMat& tau,
                                   double tol, const GaussInt* expected = nullptr);

// odd members evenized into genus 3 as ((m',p),(m'',p)), ratio at a generic genus-3 point
cplx genus3_pair_ratio(const Characteristic& m1, const Characteristic& m2, const IntMat& M, const CMat& tau3,
                       double tol);

bool gammaZ_tuple_predicate(const std::vector<Characteristic>& ms);

// ---- F_Z and orbits ----
std::vector<Characteristic> fz_tuple();
QuarterSeries fz_expansion(int order);

using SixTuple = std::vector<int>;  // sorted codes of 6 distinct even characteristics
struct OrbitDecomposition {
    std::vector<std::vector<SixTuple>> orbits;
    std::size_t total() const;
    const std::vector<SixTuple>* orbit_of(const SixTuple& t) const;
};
OrbitDecomposition orbit_decomposition();
SixTuple to_six_tuple(const std::vector<Characteristic>& ms);
std::vector<Characteristic> from_six_tuple(const SixTuple& t);

// tau1 <-> tau3 swap followed by the Phi limit (terms with e2 = e3 = 0 survive)
QuarterSeries phi_after_g0(const QuarterSeries& f);
// f(tau) -> f(4 tau) on a genus-1 series
QuarterSeries rescale4(const QuarterSeries& f);

IntMat g0_matrix();
IntMat g2_matrix();
// det(C tau + D)^{-3} F_Z(g tau) at tau = diag(tau1, i t)
cplx fz_slash_at_cusp(const IntMat& g, cplx tau1, double t, double tol);

}  // namespace lab
