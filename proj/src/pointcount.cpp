#include "lab/pointcount.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>

namespace lab {

namespace {

constexpr i64 kMaxPrime = 61;
constexpr i64 kZNaiveCap = 7;

using Point = std::array<i64, 8>;

// normalized representatives: first nonzero coordinate equals 1
template <class F>
void for_each_projective(int n, i64 p, F&& f) {
    Point x{};
    for (int lead = 0; lead < n; ++lead) {
        std::fill(x.begin(), x.end(), 0);
        x[lead] = 1;
        const int free = n - lead - 1;
        i64 total = 1;
        for (int k = 0; k < free; ++k) total *= p;
        for (i64 idx = 0; idx < total; ++idx) {
            i64 r = idx;
            for (int k = n - 1; k > lead; --k) {
                x[k] = r % p;
                r /= p;
            }
            f(x);
        }
    }
}

i64 pw(i64 a, int e) {
    i64 r = 1;
    while (e-- > 0) r *= a;
    return r;
}

i64 quartic_F(const i64* z, i64 p) {
    return mod(pw(z[0], 4) - pw(z[1], 4) + pw(z[2], 4) - pw(z[3], 4), p);
}

// right-hand sides of the four equations of Z
void z_rhs(const i64* X, i64 p, i64 out[4]) {
    out[0] = mod(2 * (X[0] * X[3] + X[1] * X[2]), p);
    out[1] = mod(2 * (X[0] * X[3] - X[1] * X[2]), p);
    out[2] = mod(2 * (X[0] * X[2] - X[1] * X[3]), p);
    out[3] = mod(2 * (X[0] * X[2] + X[1] * X[3]), p);
}

bool on_z(const Point& P, i64 p) {
    i64 r[4];
    z_rhs(&P[4], p, r);
    for (int i = 0; i < 4; ++i)
        if (mod(P[i] * P[i], p) != r[i]) return false;
    return true;
}

std::vector<i64> quartic_fibre_sizes(i64 p) {
    std::vector<i64> n4(p, 0);
    for (i64 z = 0; z < p; ++z) ++n4[pw(z, 4) % p];
    return n4;
}

// number of Y in F_p with Y^2 = c
i64 sqrt_count(i64 c, i64 p) { return c == 0 ? 1 : 1 + legendre(c, p); }

// Y-fibre size of Z over X in F_p^4
i64 z_fibre(const i64* X, i64 p) {
    i64 r[4];
    z_rhs(X, p, r);
    i64 n = 1;
    for (int i = 0; i < 4; ++i) {
        n *= sqrt_count(r[i], p);
        if (!n) break;
    }
    return n;
}

// sum of f(X) over X in F_p^4, split by X0 across threads, reduced in X0 order
template <class F>
i64 fibre_sum(i64 p, F f) {
    std::vector<std::future<i64>> parts;
    for (i64 x0 = 0; x0 < p; ++x0) {
        parts.push_back(std::async(std::launch::async, [=] {
            i64 s = 0;
            i64 X[4] = {x0, 0, 0, 0};
            for (X[1] = 0; X[1] < p; ++X[1])
                for (X[2] = 0; X[2] < p; ++X[2])
                    for (X[3] = 0; X[3] < p; ++X[3]) s += f(X);
            return s;
        }));
    }
    i64 total = 0;
    for (auto& part : parts) total += part.get();
    return total;
}

void check_prime(i64 p) {
    require_odd_prime(p);
    if (p > kMaxPrime) throw std::invalid_argument("prime exceeds the configured bound " + std::to_string(kMaxPrime));
}

i64 count_F_naive(i64 p) {
    i64 n = 0;
    for_each_projective(4, p, [&](const Point& x) { n += quartic_F(x.data(), p) == 0; });
    return n;
}

i64 affine_F(i64 p) {
    auto n4 = quartic_fibre_sizes(p);
    std::vector<i64> diff(p, 0);
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b) diff[mod(a - b, p)] += n4[a] * n4[b];
    i64 A = 0;
    for (i64 x = 0; x < p; ++x) A += diff[x] * diff[mod(-x, p)];
    return A;
}

i64 count_F_charsum(i64 p) { return (affine_F(p) - 1) / (p - 1); }

i64 count_C_naive(i64 p) {
    i64 n = 0;
    for_each_projective(3, p, [&](const Point& x) {
        n += mod(pw(x[0], 4) + pw(x[2], 4) - pw(x[1], 4), p) == 0;
    });
    return n;
}

i64 count_C_charsum(i64 p) {
    auto n4 = quartic_fibre_sizes(p);
    std::vector<i64> sum(p, 0);
    for (i64 a = 0; a < p; ++a)
        for (i64 c = 0; c < p; ++c) sum[(a + c) % p] += n4[a] * n4[c];
    i64 A = 0;
    for (i64 x = 0; x < p; ++x) A += sum[x] * n4[x];
    return (A - 1) / (p - 1);
}

bool on_cone(const Point& x, i64 p) { return quartic_F(&x[1], p) == 0; }

i64 count_cone_naive(i64 p) {
    i64 n = 0;
    for_each_projective(5, p, [&](const Point& x) { n += on_cone(x, p); });
    return n;
}

i64 count_u1c_naive(i64 p) {
    i64 n = 0;
    for_each_projective(5, p, [&](const Point& x) {
        if (on_cone(x, p) && (x[0] == 0 || mod(x[1] * x[1] + x[2] * x[2], p) == 0)) ++n;
    });
    return n;
}

i64 count_z_naive(i64 p) {
    i64 n = 0;
    for_each_projective(8, p, [&](const Point& x) { n += on_z(x, p); });
    return n;
}

i64 count_z_charsum(i64 p) {
    i64 total = fibre_sum(p, [p](const i64* X) { return z_fibre(X, p); });
    return (total - 1) / (p - 1);
}

i64 count_u2c_naive(i64 p) {
    i64 n = 0;
    for_each_projective(8, p, [&](const Point& x) {
        if (on_z(x, p) && (mod(x[0] * x[0] + x[1] * x[1], p) == 0 || x[7] == 0)) ++n;
    });
    return n;
}

// on Z, Y0^2 + Y1^2 = 4 X0 X3, so the complement of U2 is the fibre over X0 X3 = 0
i64 count_u2c_charsum(i64 p) {
    i64 total = fibre_sum(p, [p](const i64* X) { return (X[0] == 0 || X[3] == 0) ? z_fibre(X, p) : 0; });
    return (total - 1) / (p - 1);
}

i64 count_ltilde_naive(i64 p) {
    i64 n = 0;
    for (i64 s = 0; s <= p; ++s) {
        i64 X2 = s < p ? s : 1, X3 = s < p ? 1 : 0;  // [X2:X3] in P^1
        for_each_projective(4, p, [&](const Point& z) {
            i64 a = z[0] * z[0], b = z[1] * z[1], c = z[2] * z[2], d = z[3] * z[3];
            if (mod((a + b) * X2 - (c + d) * X3, p) == 0 && mod((d - c) * X2 - (a - b) * X3, p) == 0) ++n;
        });
    }
    return n;
}

}  // namespace

std::string variety_name(Variety v) {
    switch (v) {
        case Variety::FermatSurface: return "F";
        case Variety::FermatCurve: return "C";
        case Variety::ConeF: return "Cone";
        case Variety::Zsatake: return "Z";
        case Variety::U1c: return "U1c";
        case Variety::U2c: return "U2c";
        case Variety::LTilde: return "Ltilde";
        case Variety::Ztilde: return "Ztilde";
    }
    return "?";
}

std::optional<Variety> variety_from_name(const std::string& s) {
    for (auto v : {Variety::FermatSurface, Variety::FermatCurve, Variety::ConeF, Variety::Zsatake, Variety::U1c,
                   Variety::U2c, Variety::LTilde, Variety::Ztilde})
        if (variety_name(v) == s) return v;
    return std::nullopt;
}

bool method_available(Variety v, i64 p, CountMethod method) {
    if (method == CountMethod::charsum)
        return v != Variety::U1c && v != Variety::LTilde;
    switch (v) {
        case Variety::Zsatake:
        case Variety::U2c:
        case Variety::Ztilde: return p <= kZNaiveCap;
        case Variety::ConeF:
        case Variety::U1c: return p <= 31;
        default: return true;
    }
}

i64 count_variety(Variety v, i64 p, CountMethod method) {
    check_prime(p);
    if (!method_available(v, p, method))
        throw std::invalid_argument("count_variety: method not available for " + variety_name(v) + " at p = " +
                                    std::to_string(p));
    const bool naive = method == CountMethod::naive;
    switch (v) {
        case Variety::FermatSurface: return naive ? count_F_naive(p) : count_F_charsum(p);
        case Variety::FermatCurve: return naive ? count_C_naive(p) : count_C_charsum(p);
        case Variety::ConeF: return naive ? count_cone_naive(p) : (p * affine_F(p) - 1) / (p - 1);
        case Variety::Zsatake: return naive ? count_z_naive(p) : count_z_charsum(p);
        case Variety::U1c: return count_u1c_naive(p);
        case Variety::U2c: return naive ? count_u2c_naive(p) : count_u2c_charsum(p);
        case Variety::LTilde: return count_ltilde_naive(p);
        case Variety::Ztilde: {
            // blow-up: each singular line (a P^1) is replaced by a copy of F, the two copies disjoint
            i64 z = naive ? count_z_naive(p) : count_z_charsum(p);
            i64 l = naive ? count_ltilde_naive(p) : count_F_charsum(p);
            return z + 2 * l - 2 * (p + 1);
        }
    }
    throw std::logic_error("count_variety: unknown variety");
}

i64 count_z_x0_zero(i64 p) {
    check_prime(p);
    i64 total = fibre_sum(p, [p](const i64* X) { return X[0] == 0 ? z_fibre(X, p) : 0; });
    return (total - 1) / (p - 1);
}

i64 fermat_corrected(i64 p, i64 a_p) {
    i64 c = 9 + 7 * kronecker_char(-1, p) + 2 * kronecker_char(2, p) + 2 * kronecker_char(-2, p);
    return 1 + p * p + c * p + a_p;
}

i64 fermat_printed(i64 p, i64 a_p) { return fermat_corrected(p, a_p) - 1 - p * p; }

i64 measured_frobenius_trace(i64 p) {
    return count_variety(Variety::FermatSurface, p, CountMethod::charsum) - fermat_corrected(p, 0);
}

std::vector<PointCountReport> verify_count_formulas(i64 p, i64 a_p) {
    check_prime(p);
    const i64 chi = kronecker_char(-1, p);
    auto both = [&](Variety v, std::string label, i64 formula) {
        PointCountReport r;
        r.label = std::move(label);
        r.p = p;
        if (method_available(v, p, CountMethod::naive)) r.count_naive = count_variety(v, p, CountMethod::naive);
        if (method_available(v, p, CountMethod::charsum)) r.count_charsum = count_variety(v, p, CountMethod::charsum);
        r.formula = formula;
        i64 measured = r.count_charsum >= 0 ? r.count_charsum : r.count_naive;
        r.residual = measured - formula;
        return r;
    };
    const i64 F = count_variety(Variety::FermatSurface, p, CountMethod::naive);
    std::vector<PointCountReport> out;
    out.push_back(both(Variety::FermatSurface, "fermat", fermat_corrected(p, a_p)));
    out.push_back(both(Variety::U1c, "U1c", F + 4 * p * p + 4 * p * p * chi - 4 * p - 6 * p * chi + 1 + 2 * chi));
    out.push_back(both(Variety::U2c, "U2c", 4 * p * p - 2 * p + 2 + (4 * p * p - 6 * p + 2) * chi));
    out.push_back(both(Variety::ConeF, "cone", p * F + 1));
    out.push_back(both(Variety::Zsatake, "Z", (p - 1) * F + 2 * p + 2));
    out.push_back(both(Variety::LTilde, "Ltilde", F));
    out.push_back(both(Variety::Ztilde, "Ztilde", (p + 1) * F));
    PointCountReport x0;
    x0.label = "Z_X0=0";
    x0.p = p;
    x0.count_charsum = count_z_x0_zero(p);
    x0.formula = 2 * p * p - p + 2 + (2 * p * p - 2 * p) * chi;
    x0.residual = x0.count_charsum - x0.formula;
    out.push_back(x0);
    return out;
}

// ---- birational map ----

bool BirationalReport::ok() const {
    return identity_matches && u1 == u2 && images_on_z == u1 && images_in_u2 == u1 && distinct_images == u1 &&
           inverse_ok == u1;
}

namespace {

bool on_z_permuted(const Point& img, const std::array<int, 8>& perm, i64 p) {
    Point q{};
    for (int k = 0; k < 8; ++k) q[k] = img[perm[k]];
    return on_z(q, p);
}

Point normalize(Point x, i64 p, int n) {
    for (int k = 0; k < n; ++k) {
        if (x[k] % p) {
            i64 inv = Fp(x[k], p).inverse().value();
            for (int j = 0; j < n; ++j) x[j] = mod(x[j] * inv, p);
            break;
        }
    }
    return x;
}

}  // namespace

BirationalReport verify_birational_map(i64 p) {
    check_prime(p);
    BirationalReport rep;
    rep.p = p;
    std::vector<Point> src, img;
    // U1: t != 0, so take t = 1
    for (i64 idx = 0; idx < p * p * p * p; ++idx) {
        Point x{};
        x[0] = 1;
        i64 r = idx;
        for (int k = 4; k >= 1; --k) {
            x[k] = r % p;
            r /= p;
        }
        if (!on_cone(x, p)) continue;
        i64 s01 = mod(x[1] * x[1] + x[2] * x[2], p);
        if (s01 == 0) continue;
        i64 s23 = mod(x[3] * x[3] + x[4] * x[4], p);
        i64 d23 = mod(x[4] * x[4] - x[3] * x[3], p);
        i64 t = x[0];
        i64 tinv = Fp(t, p).inverse().value();
        Point y{mod(2 * x[1], p), mod(2 * x[2], p), mod(2 * x[3], p), mod(2 * x[4], p), mod(s01 * tinv, p),
                mod(d23 * tinv, p), mod(t * s23 % p * Fp(s01, p).inverse().value(), p), t};
        src.push_back(x);
        img.push_back(normalize(y, p, 8));
    }
    rep.u1 = static_cast<i64>(src.size());
    rep.u2 = count_variety(Variety::Zsatake, p, CountMethod::charsum) - count_variety(Variety::U2c, p, CountMethod::charsum);

    // coordinate matching: permutations of the Y block and of the X block
    std::array<int, 4> py{0, 1, 2, 3};
    do {
        std::array<int, 4> px{4, 5, 6, 7};
        do {
            std::array<int, 8> perm{py[0], py[1], py[2], py[3], px[0], px[1], px[2], px[3]};
            bool all = std::all_of(img.begin(), img.end(), [&](const Point& q) { return on_z_permuted(q, perm, p); });
            if (all && !img.empty()) rep.matching_permutations.push_back(std::vector<int>(perm.begin(), perm.end()));
        } while (std::next_permutation(px.begin(), px.end()));
    } while (std::next_permutation(py.begin(), py.end()));
    const std::vector<int> ident{0, 1, 2, 3, 4, 5, 6, 7};
    rep.identity_matches = std::find(rep.matching_permutations.begin(), rep.matching_permutations.end(), ident) !=
                           rep.matching_permutations.end();

    std::set<Point> distinct;
    const i64 inv2 = Fp(2, p).inverse().value();
    for (std::size_t k = 0; k < img.size(); ++k) {
        const Point& y = img[k];
        rep.images_on_z += on_z(y, p);
        rep.images_in_u2 += mod(y[0] * y[0] + y[1] * y[1], p) != 0 && y[7] != 0;
        distinct.insert(y);
        Point back{y[7], mod(y[0] * inv2, p), mod(y[1] * inv2, p), mod(y[2] * inv2, p), mod(y[3] * inv2, p)};
        rep.inverse_ok += normalize(back, p, 5) == normalize(src[k], p, 5);
    }
    rep.distinct_images = static_cast<i64>(distinct.size());
    return rep;
}

// ---- boundary lines ----

i64 boundary_quadric(int i, const i64 X[4], i64 p) {
    const i64 a = X[0], b = X[1], c = X[2], d = X[3];
    i64 v;
    switch (i) {
        case 0: v = a * a + b * b + c * c + d * d; break;
        case 1: v = a * a - b * b + c * c - d * d; break;
        case 2: v = a * a + b * b - c * c - d * d; break;
        case 3: v = a * a - b * b - c * c + d * d; break;
        case 4: v = 2 * (a * b + c * d); break;
        case 5: v = 2 * (a * c + b * d); break;
        case 6: v = 2 * (a * d + b * c); break;
        case 7: v = 2 * (a * b - c * d); break;
        case 8: v = 2 * (a * c - b * d); break;
        case 9: v = 2 * (a * d - b * c); break;
        default: throw std::invalid_argument("boundary_quadric: index 0..9");
    }
    return mod(v, p);
}

bool BoundaryReport::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const LineReport& l) { return l.vanishing.size() >= 2; });
}

BoundaryReport verify_boundary_lines(i64 p) {
    check_prime(p);
    BoundaryReport rep;
    rep.p = p;
    rep.sqrt_minus_one = p % 4 == 1;
    i64 ii = 0;
    if (rep.sqrt_minus_one)
        for (i64 x = 2; x < p; ++x)
            if (x * x % p == p - 1) {
                ii = x;
                break;
            }

    using Param = std::function<std::array<i64, 4>(i64, i64)>;
    std::vector<std::pair<std::string, Param>> lines;
    auto sgn = [](int k) { return k ? -1 : 1; };
    auto tag = [](int s1, int s2) { return std::string("(") + (s1 ? "-" : "+") + "," + (s2 ? "-" : "+") + ")"; };
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
            i64 e1 = sgn(s1), e2 = sgn(s2);
            if (rep.sqrt_minus_one) {
                lines.push_back({"L1" + tag(s1, s2), [=](i64 u, i64 v) { return std::array<i64, 4>{e1 * ii * u, e2 * ii * v, u, v}; }});
                lines.push_back({"L2" + tag(s1, s2), [=](i64 u, i64 v) { return std::array<i64, 4>{e1 * ii * u, u, e2 * ii * v, v}; }});
                lines.push_back({"L3" + tag(s1, s2), [=](i64 u, i64 v) { return std::array<i64, 4>{e1 * ii * v, e2 * ii * u, u, v}; }});
            }
            lines.push_back({"L4" + tag(s1, s2), [=](i64 u, i64 v) { return std::array<i64, 4>{e1 * v, e2 * u, u, v}; }});
            lines.push_back({"L5" + tag(s1, s2), [=](i64 u, i64 v) { return std::array<i64, 4>{e1 * u, u, e2 * v, v}; }});
            lines.push_back({"L6" + tag(s1, s2), [=](i64 u, i64 v) { return std::array<i64, 4>{e1 * u, e2 * v, u, v}; }});
        }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int free[2], k = 0;
            for (int c = 0; c < 4; ++c)
                if (c != i && c != j) free[k++] = c;
            lines.push_back({"l" + std::to_string(i) + std::to_string(j), [=](i64 u, i64 v) {
                                 std::array<i64, 4> X{0, 0, 0, 0};
                                 X[free[0]] = u;
                                 X[free[1]] = v;
                                 return X;
                             }});
        }

    for (const auto& [name, param] : lines) {
        LineReport lr;
        lr.name = name;
        for (int q = 0; q < 10; ++q) {
            bool all = true;
            for (i64 s = 0; s <= p && all; ++s) {
                i64 u = s < p ? s : 1, v = s < p ? 1 : 0;
                auto X = param(u, v);
                i64 Xm[4];
                for (int c = 0; c < 4; ++c) Xm[c] = mod(X[c], p);
                all = boundary_quadric(q, Xm, p) == 0;
            }
            if (all) lr.vanishing.push_back(q);
        }
        rep.lines.push_back(lr);
    }
    return rep;
}

}  // namespace lab
