#include "lab/theta.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "lab/lattice.hpp"

namespace lab {

namespace {

const cplx I1(0.0, 1.0);

int mod2(i64 x) { return static_cast<int>(mod(x, 2)); }

IntMat mat4(std::initializer_list<std::initializer_list<i64>> rows) {
    IntMat M(4, 4);
    int r = 0;
    for (auto row : rows) {
        int c = 0;
        for (i64 v : row) M(r, c++) = v;
        ++r;
    }
    return M;
}

Eigen::Matrix<i64, Eigen::Dynamic, 1> diag_of(const IntMat& X) { return X.diagonal(); }

}  // namespace

// ---- characteristics ----

Characteristic::Characteristic(std::vector<int> mp, std::vector<int> mpp)
    : g(static_cast<int>(mp.size())), top(std::move(mp)), bot(std::move(mpp)) {
    if (top.size() != bot.size() || g < 1 || g > 3)
        throw std::invalid_argument("Characteristic: bad genus");
}

Characteristic Characteristic::parse(const std::string& s) {
    if (s.size() % 2 != 0 || s.empty() || s.size() > 6)
        throw std::invalid_argument("Characteristic: expected 2g binary digits, got '" + s + "'");
    int g = static_cast<int>(s.size()) / 2;
    std::vector<int> a, b;
    for (int i = 0; i < 2 * g; ++i) {
        if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("Characteristic: non-binary digit in '" + s + "'");
        (i < g ? a : b).push_back(s[i] - '0');
    }
    return Characteristic(a, b);
}

Characteristic Characteristic::from_code(int code) {
    if (code < 0 || code > 15) throw std::invalid_argument("Characteristic: code out of range");
    return Characteristic({(code >> 3) & 1, (code >> 2) & 1}, {(code >> 1) & 1, code & 1});
}

int Characteristic::code() const {
    if (g != 2) throw std::logic_error("Characteristic::code: genus 2 only");
    auto r = reduced();
    return r.top[0] << 3 | r.top[1] << 2 | r.bot[0] << 1 | r.bot[1];
}

std::string Characteristic::str() const {
    std::string s;
    auto r = reduced();
    for (int v : r.top) s += char('0' + v);
    for (int v : r.bot) s += char('0' + v);
    return s;
}

bool Characteristic::even() const {
    int s = 0;
    for (int i = 0; i < g; ++i) s += top[i] * bot[i];
    return mod2(s) == 0;
}

Characteristic Characteristic::reduced() const {
    Characteristic r = *this;
    for (auto& v : r.top) v = mod2(v);
    for (auto& v : r.bot) v = mod2(v);
    return r;
}

Parity parity(const Characteristic& m) { return m.even() ? Parity::even : Parity::odd; }

std::vector<Characteristic> even_characteristics() {
    std::vector<Characteristic> out;
    for (int c = 0; c < 16; ++c) {
        auto m = Characteristic::from_code(c);
        if (m.even()) out.push_back(m);
    }
    return out;
}

// ---- symplectic ----

Blocks blocks(const IntMat& M) {
    const int g = static_cast<int>(M.rows()) / 2;
    return {M.topLeftCorner(g, g), M.topRightCorner(g, g), M.bottomLeftCorner(g, g), M.bottomRightCorner(g, g)};
}

IntMat from_blocks(const IntMat& A, const IntMat& B, const IntMat& C, const IntMat& D) {
    const auto g = A.rows();
    IntMat M(2 * g, 2 * g);
    M << A, B, C, D;
    return M;
}

IntMat j_matrix(int g) {
    IntMat Z = IntMat::Zero(g, g), I = IntMat::Identity(g, g);
    return from_blocks(Z, -I, I, Z);
}

IntMat identity_sp(int g) { return IntMat::Identity(2 * g, 2 * g); }

bool is_symplectic(const IntMat& M) {
    if (M.rows() != M.cols() || M.rows() % 2 != 0) return false;
    const int g = static_cast<int>(M.rows()) / 2;
    IntMat J = j_matrix(g);
    return M.transpose() * J * M == J;
}

IntMat sp_inverse(const IntMat& M) {
    auto [A, B, C, D] = blocks(M);
    return from_blocks(D.transpose(), -B.transpose(), -C.transpose(), A.transpose());
}

static bool congruent_identity(const IntMat& M, i64 n) {
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (mod(M(i, j) - (i == j ? 1 : 0), n) != 0) return false;
    return true;
}

bool in_gamma2(const IntMat& M) { return is_symplectic(M) && congruent_identity(M, 2); }
bool in_gamma4(const IntMat& M) { return is_symplectic(M) && congruent_identity(M, 4); }

bool in_gamma24(const IntMat& M) {
    if (!in_gamma2(M)) return false;
    auto [A, B, C, D] = blocks(M);
    auto d1 = diag_of(A * B.transpose()), d2 = diag_of(C * D.transpose());
    for (int i = 0; i < d1.size(); ++i)
        if (mod(d1[i], 4) || mod(d2[i], 4)) return false;
    return true;
}

bool in_gamma48(const IntMat& M) {
    if (!in_gamma4(M)) return false;
    auto [A, B, C, D] = blocks(M);
    for (int i = 0; i < A.rows(); ++i)
        if (mod(B(i, i), 8) || mod(C(i, i), 8)) return false;
    return true;
}

IntMat generator(int i) {
    switch (i) {
        case 1: return mat4({{1, 0, 0, 0}, {2, 1, 0, 0}, {0, 0, 1, -2}, {0, 0, 0, 1}});
        case 2: return generator(1).transpose();
        case 3: return mat4({{1, 0, 0, 2}, {0, 1, 2, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        case 4: return generator(3).transpose();
        case 5: return -IntMat::Identity(4, 4);
        case 6: return mat4({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
        case 7: return mat4({{1, 0, 2, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        case 8: return mat4({{1, 0, 0, 0}, {0, 1, 0, 2}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        case 9: return generator(7).transpose();
        case 10: return generator(8).transpose();
        default: throw std::invalid_argument("generator index must be 1..10");
    }
}

IntMat table_generator(int i) {
    if (i == 9 || i == 10) return sp_inverse(generator(i));
    return generator(i);
}

std::vector<IntMat> gammaZ_generators() {
    auto e = [](int i) { return generator(i); };
    return {e(1) * e(4), e(1) * e(6), e(1) * e(9) * e(9), e(8) * e(8) * e(3), e(2) * e(10) * e(10)};
}

std::vector<IntMat> gamma48_generators() {
    const IntMat I = IntMat::Identity(2, 2), Z = IntMat::Zero(2, 2);
    std::vector<IntMat> S{IntMat{{8, 0}, {0, 0}}, IntMat{{0, 0}, {0, 8}}, IntMat{{0, 4}, {4, 0}}};
    std::vector<IntMat> out;
    for (const auto& s : S) out.push_back(from_blocks(I, s, Z, I));
    for (const auto& s : S) out.push_back(from_blocks(I, Z, s, I));
    for (const IntMat& A : {IntMat{{1, 4}, {0, 1}}, IntMat{{1, 0}, {4, 1}}}) {
        IntMat Ait = IntMat{{A(1, 1), -A(1, 0)}, {-A(0, 1), A(0, 0)}};  // det A = 1
        out.push_back(from_blocks(A, Z, Z, Ait));
    }
    return out;
}

IntMat random_word(const std::vector<IntMat>& gens, int length, std::mt19937_64& rng) {
    if (gens.empty()) throw std::invalid_argument("random_word: no generators");
    std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
    IntMat M = identity_sp(static_cast<int>(gens.front().rows() / 2));
    for (int k = 0; k < length; ++k) {
        std::size_t j = pick(rng);
        M = M * (j < gens.size() ? gens[j] : sp_inverse(gens[j - gens.size()]));
    }
    return M;
}

std::vector<std::string> gammaZ_generator_names() { return {"e1e4", "e1e6", "e1e9^2", "e8^2e3", "e2e10^2"}; }

IntMat embed_genus3(const IntMat& M) {
    if (M.rows() != 4) throw std::invalid_argument("embed_genus3: expected a 4x4 matrix");
    const int idx[4] = {0, 1, 3, 4};
    IntMat R = IntMat::Zero(6, 6);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) R(idx[r], idx[c]) = M(r, c);
    R(2, 2) = 1;
    R(5, 5) = 1;
    return R;
}

bool is_siegel_point(const CMat& tau) {
    if (tau.rows() != tau.cols() || tau.rows() < 1) return false;
    if ((tau - tau.transpose()).norm() > 1e-12 * (1 + tau.norm())) return false;
    Eigen::MatrixXd Y = tau.imag();
    Eigen::LLT<Eigen::MatrixXd> llt(Y);
    return llt.info() == Eigen::Success && min_eigenvalue(Y) > 0;
}

void require_siegel_point(const CMat& tau) {
    if (!is_siegel_point(tau)) throw std::domain_error("not a point of the Siegel upper half space");
}

std::pair<CMat, cplx> act(const IntMat& M, const CMat& tau) {
    auto [A, B, C, D] = blocks(M);
    CMat Ac = A.cast<double>().cast<cplx>(), Bc = B.cast<double>().cast<cplx>();
    CMat Cc = C.cast<double>().cast<cplx>(), Dc = D.cast<double>().cast<cplx>();
    CMat J = Cc * tau + Dc;
    CMat r = (Ac * tau + Bc) * J.inverse();
    r = 0.5 * (r + r.transpose()).eval();
    return {r, J.determinant()};
}

// ---- expansions ----

QuarterSeries theta_expansion(const Characteristic& m, int order) {
    if (m.g != 1 && m.g != 2) throw std::invalid_argument("theta_expansion: genus 1 or 2 only");
    QuarterSeries s(m.g, order);
    const int lim = static_cast<int>(std::sqrt(static_cast<double>(order))) + 2;
    // X = 2a + m' so that x = X/2; index (X1^2, 2 X1 X2, X2^2), coefficient i^{X.m''}
    if (m.g == 1) {
        for (int X = -lim; X <= lim; ++X) {
            if (mod2(X - m.top[0])) continue;
            s.add_term({X * X, 0, 0}, i_pow(static_cast<i64>(X) * m.bot[0]));
        }
        return s;
    }
    for (int X1 = -lim; X1 <= lim; ++X1) {
        if (mod2(X1 - m.top[0])) continue;
        for (int X2 = -lim; X2 <= lim; ++X2) {
            if (mod2(X2 - m.top[1])) continue;
            s.add_term({X1 * X1, 2 * X1 * X2, X2 * X2},
                       i_pow(static_cast<i64>(X1) * m.bot[0] + static_cast<i64>(X2) * m.bot[1]));
        }
    }
    return s;
}

QuarterSeries product_expansion(const std::vector<Characteristic>& ms, int order) {
    if (ms.empty()) throw std::invalid_argument("product_expansion: empty tuple");
    QuarterSeries r = QuarterSeries::one(ms.front().g, order);
    for (const auto& m : ms) r = series_combine(r, theta_expansion(m, order), SeriesOp::mul, order);
    return r;
}

cplx evaluate_series(const QuarterSeries& s, const CMat& tau) {
    cplx sum = 0;
    for (const auto& [k, c] : s.terms()) {
        cplx e = s.genus() == 1 ? tau(0, 0) * double(k[0])
                                : tau(0, 0) * double(k[0]) + tau(0, 1) * double(k[1]) + tau(1, 1) * double(k[2]);
        sum += cplx(double(c.re), double(c.im)) * std::exp(I1 * M_PI * e / 4.0);
    }
    return sum;
}

// ---- numerics ----

cplx theta_eval(const Characteristic& m, const CMat& tau, double tol) {
    require_siegel_point(tau);
    const int g = static_cast<int>(tau.rows());
    if (m.g != g) throw std::invalid_argument("theta_eval: genus mismatch");
    Eigen::MatrixXd Y = tau.imag();
    double r2 = radius2_for_tol(min_eigenvalue(Y), g, tol);
    Eigen::VectorXd shift(g);
    for (int i = 0; i < g; ++i) shift[i] = 0.5 * m.top[i];
    cplx sum = 0;
    for (const auto& p : ellipsoid_points(Y, shift, r2)) {
        cplx e = 0;
        double lin = 0;
        for (int i = 0; i < g; ++i) {
            lin += p.x[i] * m.bot[i];
            for (int j = 0; j < g; ++j) e += tau(i, j) * (p.x[i] * p.x[j]);
        }
        sum += std::exp(I1 * M_PI * (e + lin));
    }
    return sum;
}

cplx theta_product_eval(const std::vector<Characteristic>& ms, const CMat& tau, double tol) {
    cplx r = 1;
    for (const auto& m : ms) r *= theta_eval(m, tau, tol);
    return r;
}

// ---- transformation ----

ActionResult characteristic_action(const IntMat& M, const Characteristic& m) {
    if (!is_symplectic(M)) throw std::invalid_argument("characteristic_action: matrix is not symplectic");
    const int g = static_cast<int>(M.rows()) / 2;
    if (m.g != g) throw std::invalid_argument("characteristic_action: genus mismatch");
    auto [A, B, C, D] = blocks(M);
    Eigen::Matrix<i64, 1, Eigen::Dynamic> row(2 * g), mp(g), mpp(g);
    for (int i = 0; i < g; ++i) {
        row[i] = mp[i] = m.top[i];
        row[g + i] = mpp[i] = m.bot[i];
    }
    Eigen::Matrix<i64, 1, Eigen::Dynamic> img = row * sp_inverse(M);
    auto dcd = diag_of(C * D.transpose()), dab = diag_of(A * B.transpose());
    std::vector<int> t(g), b(g);
    for (int i = 0; i < g; ++i) {
        t[i] = static_cast<int>(img[i] + dcd[i]);
        b[i] = static_cast<int>(img[g + i] + dab[i]);
    }
    i64 q = (mp * D.transpose() * B * mp.transpose())(0, 0) - 2 * (mp * B.transpose() * C * mpp.transpose())(0, 0) +
            (mpp * C.transpose() * A * mpp.transpose())(0, 0);
    i64 l = ((mp * D.transpose() - mpp * C.transpose()) * dab)(0, 0);
    ActionResult r;
    r.unreduced = Characteristic(t, b);
    r.image = r.unreduced.reduced();
    r.phase8 = static_cast<int>(mod(-q + 2 * l, 8));
    return r;
}

int kappa2(const IntMat& M) {
    if (!in_gamma2(M)) throw std::invalid_argument("kappa2: matrix not in Gamma(2)");
    const int g = static_cast<int>(M.rows()) / 2;
    i64 tr = blocks(M).D.trace();
    return mod((tr - g) / 2, 2) == 0 ? 1 : -1;
}

double igusa_squared_residual(const Characteristic& m, const IntMat& M, const CMat& tau, double tol) {
    auto ar = characteristic_action(M, m);
    auto [t2, det] = act(M, tau);
    cplx lhs = theta_eval(ar.unreduced, t2, tol);
    lhs *= lhs;
    cplx th = theta_eval(m, tau, tol);
    cplx rhs = double(kappa2(M)) * std::exp(I1 * (M_PI / 2.0 * ar.phase8)) * det * th * th;
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / scale;
}

GaussInt table1_char(const std::vector<Characteristic>& ms, int i) {
    if (ms.size() % 2 != 0) throw std::invalid_argument("table1_char: tuple length must be even");
    i64 sa = 0, sb = 0, sc = 0, sd = 0, sab = 0, sac = 0, sad = 0, sbc = 0, scd = 0;
    for (const auto& m0 : ms) {
        auto m = m0.reduced();
        if (m.g != 2) throw std::invalid_argument("table1_char: genus 2 only");
        i64 a = m.top[0], b = m.top[1], c = m.bot[0], d = m.bot[1];
        sa += a; sb += b; sc += c; sd += d;
        sab += a * b; sac += a * c; sad += a * d; sbc += b * c; scd += c * d;
    }
    const i64 r = static_cast<i64>(ms.size()) / 2;
    switch (i) {
        case 1: return i_pow(2 * sbc);
        case 2: return i_pow(2 * sad);
        case 3: return i_pow(2 * sab);
        case 4: return i_pow(2 * scd);
        case 5: return GaussInt(1);
        case 6: return i_pow(2 * (r + sac));
        case 7: return i_pow(sa);
        case 8: return i_pow(sb);
        case 9: return i_pow(sc);
        case 10: return i_pow(sd);
        default: throw std::invalid_argument("table1_char: generator index must be 1..10");
    }
}

GaussInt table1_char(const Characteristic& m1, const Characteristic& m2, int i) { return table1_char({m1, m2}, i); }

cplx slash_ratio(const std::vector<Characteristic>& ms, const IntMat& M, const CMat& tau, double tol) {
    if (ms.size() % 2 != 0) throw std::invalid_argument("slash_ratio: tuple length must be even");
    auto [t2, det] = act(M, tau);
    cplx num = theta_product_eval(ms, t2, tol);
    cplx den = theta_product_eval(ms, tau, tol);
    return num * std::pow(det, -static_cast<int>(ms.size() / 2)) / den;
}

double verify_igusa_transformation(const std::vector<Characteristic>& ms, const IntMat& M, const CMat& tau,
                                   double tol, const GaussInt* expected) {
    if (!in_gamma2(M)) throw std::invalid_argument("verify_igusa_transformation: matrix not in Gamma(2)");
    double res = 0;
    for (const auto& m : ms) {
        if (!m.even()) throw std::invalid_argument("verify_igusa_transformation: odd characteristic " + m.str());
        res = std::max(res, igusa_squared_residual(m, M, tau, tol));
    }
    if (expected) {
        cplx want(double(expected->re), double(expected->im));
        res = std::max(res, std::abs(slash_ratio(ms, M, tau, tol) - want));
    }
    return res;
}

cplx genus3_pair_ratio(const Characteristic& m1, const Characteristic& m2, const IntMat& M, const CMat& tau3,
                       double tol) {
    auto lift = [](const Characteristic& m) {
        auto r = m.reduced();
        int p = r.even() ? 0 : 1;
        return Characteristic({r.top[0], r.top[1], p}, {r.bot[0], r.bot[1], p});
    };
    auto n1 = lift(m1), n2 = lift(m2);
    IntMat M3 = embed_genus3(M);
    auto [t2, det] = act(M3, tau3);
    cplx num = theta_eval(n1, t2, tol) * theta_eval(n2, t2, tol);
    cplx den = theta_eval(n1, tau3, tol) * theta_eval(n2, tau3, tol);
    return num / (det * den);
}

bool gammaZ_tuple_predicate(const std::vector<Characteristic>& ms) {
    i64 sb = 0, sc = 0, sd = 0, sac = 0, sad = 0, sbc = 0, scd = 0;
    for (const auto& m0 : ms) {
        auto m = m0.reduced();
        i64 a = m.top[0], b = m.top[1], c = m.bot[0], d = m.bot[1];
        sb += b; sc += c; sd += d;
        sac += a * c; sad += a * d; sbc += b * c; scd += c * d;
    }
    return mod(sbc + scd, 2) == 0 && mod(sbc + sc, 2) == 0 && mod(sb + sad, 2) == 0 && mod(sad + sd, 2) == 0 &&
           mod(sbc + sac - 1, 2) == 0;
}

// ---- F_Z, orbits ----

std::vector<Characteristic> fz_tuple() {
    std::vector<Characteristic> r;
    for (const char* s : {"0000", "0001", "0010", "0011", "0110", "0100"}) r.push_back(Characteristic::parse(s));
    return r;
}

QuarterSeries fz_expansion(int order) { return product_expansion(fz_tuple(), order); }

std::size_t OrbitDecomposition::total() const {
    std::size_t n = 0;
    for (const auto& o : orbits) n += o.size();
    return n;
}

const std::vector<SixTuple>* OrbitDecomposition::orbit_of(const SixTuple& t) const {
    for (const auto& o : orbits)
        if (std::find(o.begin(), o.end(), t) != o.end()) return &o;
    return nullptr;
}

SixTuple to_six_tuple(const std::vector<Characteristic>& ms) {
    SixTuple t;
    for (const auto& m : ms) t.push_back(m.code());
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<Characteristic> from_six_tuple(const SixTuple& t) {
    std::vector<Characteristic> r;
    for (int c : t) r.push_back(Characteristic::from_code(c));
    return r;
}

OrbitDecomposition orbit_decomposition() {
    // J and the three elementary translations generate Sp_2(Z)
    std::vector<IntMat> gens{j_matrix(2)};
    IntMat I = IntMat::Identity(2, 2), Z = IntMat::Zero(2, 2);
    for (auto S : {IntMat{{1, 0}, {0, 0}}, IntMat{{0, 0}, {0, 1}}, IntMat{{0, 1}, {1, 0}}})
        gens.push_back(from_blocks(I, S, Z, I));

    // action on codes, once per generator
    std::vector<std::array<int, 16>> perm;
    for (const auto& M : gens) {
        std::array<int, 16> p{};
        for (int c = 0; c < 16; ++c) p[c] = characteristic_action(M, Characteristic::from_code(c)).image.code();
        perm.push_back(p);
    }
    std::vector<int> ev;
    for (const auto& m : even_characteristics()) ev.push_back(m.code());

    std::vector<SixTuple> all;
    for (int mask = 0; mask < (1 << 10); ++mask) {
        if (__builtin_popcount(mask) != 6) continue;
        SixTuple t;
        for (int k = 0; k < 10; ++k)
            if (mask >> k & 1) t.push_back(ev[k]);
        all.push_back(t);
    }
    std::set<SixTuple> seen;
    OrbitDecomposition out;
    for (const auto& start : all) {
        if (seen.count(start)) continue;
        std::vector<SixTuple> orb{start};
        std::deque<SixTuple> work{start};
        seen.insert(start);
        while (!work.empty()) {
            SixTuple cur = work.front();
            work.pop_front();
            for (const auto& p : perm) {
                SixTuple nx;
                for (int c : cur) nx.push_back(p[c]);
                std::sort(nx.begin(), nx.end());
                if (seen.insert(nx).second) {
                    orb.push_back(nx);
                    work.push_back(nx);
                }
            }
        }
        std::sort(orb.begin(), orb.end());
        out.orbits.push_back(std::move(orb));
    }
    std::stable_sort(out.orbits.begin(), out.orbits.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

QuarterSeries phi_after_g0(const QuarterSeries& f) {
    if (f.genus() != 2) throw std::invalid_argument("phi_after_g0: genus-2 series expected");
    QuarterSeries r(1, f.order());
    for (const auto& [k, c] : f.terms()) {
        // after (e1,e2,e3) -> (e3,e2,e1) the surviving terms have e2 = 0 and (new) e3 = old e1 = 0
        if (k[0] == 0 && k[1] == 0) r.add_term({k[2], 0, 0}, c);
    }
    return r;
}

QuarterSeries rescale4(const QuarterSeries& f) {
    if (f.genus() != 1) throw std::invalid_argument("rescale4: genus-1 series expected");
    QuarterSeries r(1, 4 * f.order());
    for (const auto& [k, c] : f.terms()) r.add_term({4 * k[0], 0, 0}, c);
    return r;
}

IntMat g0_matrix() { return mat4({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}); }
IntMat g2_matrix() { return mat4({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {2, 0, 1, 0}}); }

cplx fz_slash_at_cusp(const IntMat& g, cplx tau1, double t, double tol) {
    CMat tau(2, 2);
    tau << tau1, 0.0, 0.0, cplx(0, t);
    auto [t2, det] = act(g, tau);
    return theta_product_eval(fz_tuple(), t2, tol) / std::pow(det, 3);
}

}  // namespace lab
