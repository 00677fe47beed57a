#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lab/core_arith.hpp"

namespace lab {

// F: Z0^4 - Z1^4 + Z2^4 - Z3^4 = 0 in P^3
// C: x0^4 + x2^4 = x1^4 in P^2
// ConeF: the same quartic in [t : Z0 : ... : Z3] in P^4
// Zsatake: Y0^2 = 2(X0X3 + X1X2), Y1^2 = 2(X0X3 - X1X2), Y2^2 = 2(X0X2 - X1X3), Y3^2 = 2(X0X2 + X1X3)
//          in [Y0:Y1:Y2:Y3:X0:X1:X2:X3]
// U1c: t = 0 or Z0^2 + Z1^2 = 0 on ConeF;  U2c: Y0^2 + Y1^2 = 0 or X3 = 0 on Zsatake
// LTilde: proper transform of the singular line X0 = X1 = Y = 0, in P^1 x P^3
// Ztilde: blow-up of Zsatake along its two singular lines
enum class Variety { FermatSurface, FermatCurve, ConeF, Zsatake, U1c, U2c, LTilde, Ztilde };
enum class CountMethod { naive, charsum };

std::string variety_name(Variety v);
std::optional<Variety> variety_from_name(const std::string& s);

// projective F_p-points; throws std::invalid_argument for a bad p or a method outside its cap
i64 count_variety(Variety v, i64 p, CountMethod method);
bool method_available(Variety v, i64 p, CountMethod method);

// points of Zsatake with X0 = 0
i64 count_z_x0_zero(i64 p);

struct PointCountReport {
    std::string label;
    i64 p = 0;
    i64 count_naive = -1;    // -1: not run
    i64 count_charsum = -1;  // -1: not run
    i64 formula = 0;
    i64 residual = 0;        // measured - formula
};

std::vector<PointCountReport> verify_count_formulas(i64 p, i64 a_p);

// 1 + p^2 + (9 + 7 chi_-1 + 2 chi_2 + 2 chi_-2) p + a_p
i64 fermat_corrected(i64 p, i64 a_p);
// the formula as printed (no 1 + p^2)
i64 fermat_printed(i64 p, i64 a_p);
// |F(F_p)| - 1 - p^2 - (9 + 7 chi_-1 + 2 chi_2 + 2 chi_-2) p
i64 measured_frobenius_trace(i64 p);

struct BirationalReport {
    i64 p = 0;
    i64 u1 = 0;                     // |U1(F_p)|
    i64 u2 = 0;                     // |U2(F_p)| = |Z| - |U2c|
    i64 images_on_z = 0;            // phi(P) satisfies the equations of Z
    i64 images_in_u2 = 0;
    i64 distinct_images = 0;
    i64 inverse_ok = 0;             // inverse(phi(P)) == P
    std::vector<std::vector<int>> matching_permutations;  // (Y perm, X perm) as 8-index lists
    bool identity_matches = false;
    bool ok() const;
};
BirationalReport verify_birational_map(i64 p);

struct LineReport {
    std::string name;
    std::vector<int> vanishing;  // indices of Q0..Q9 vanishing on the whole line
};
struct BoundaryReport {
    i64 p = 0;
    bool sqrt_minus_one = false;  // false: only the l_{i,j} family was checked
    std::vector<LineReport> lines;
    bool ok() const;  // every checked line kills at least two quadrics
};
BoundaryReport verify_boundary_lines(i64 p);

// Q_i(X) for i = 0..9 over F_p
i64 boundary_quadric(int i, const i64 X[4], i64 p);

}  // namespace lab
