#include "lab/soudry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "lab/lattice.hpp"

namespace lab {

std::string ez_convention() {
    return "pairing Re(z1 conj z2), exp(pi i (tau1 N1 + 2 tau2 Re + tau3 N2)); "
           "form h0 dt1^dt2 + h1 dt1^dt3 + h2 dt2^dt3";
}

EZValue ez_eval(const CMat& tau, double tol, double radius2) {
    require_siegel_point(tau);
    if (tau.rows() != 2) throw std::invalid_argument("ez_eval: genus 2 point expected");
    if (!(tol > 0)) throw std::invalid_argument("ez_eval: tol must be positive");
    // u = (Re z1, Re z2), v = (Im z1, Im z2); the exponent is pi i (u tau u + v tau v)
    const Eigen::MatrixXd Y = tau.imag();
    const double r2 = radius2 > 0 ? radius2 : radius2_for_tol(min_eigenvalue(Y), 4, tol, 2);
    Eigen::VectorXd shift(2);
    shift << 0.5, 0.0;
    auto pts = ellipsoid_points(Y, shift, r2);
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) { return a.q < b.q; });
    const cplx I1(0, 1);
    std::vector<cplx> phase(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& x = pts[k].x;
        cplx e = tau(0, 0) * x[0] * x[0] + 2.0 * tau(0, 1) * x[0] * x[1] + tau(1, 1) * x[1] * x[1];
        phase[k] = std::exp(I1 * M_PI * e);
    }
    EZValue h{0.0, 0.0, 0.0};
    for (std::size_t a = 0; a < pts.size(); ++a) {
        const auto& u = pts[a];
        for (std::size_t b = 0; b < pts.size(); ++b) {
            const auto& v = pts[b];
            if (u.q + v.q > r2) break;
            const cplx z1(u.x[0], v.x[0]), z2(u.x[1], v.x[1]);
            const long x1 = std::lround(u.x[0] - 0.5), y1 = std::lround(v.x[0] - 0.5), x2 = std::lround(u.x[1]);
            const double sg = ((x1 + y1 + x2) % 2 == 0) ? 1.0 : -1.0;
            const cplx w = 0.5 * I1 * sg * phase[a] * phase[b];
            const cplx c1 = std::conj(z1), c2 = std::conj(z2);
            h[0] += w * c1 * c1;
            h[1] += w * c1 * c2;
            h[2] += w * c2 * c2;
        }
    }
    return h;
}

EZValue ez_pullback(const IntMat& g, const CMat& tau, double tol) {
    if (!is_symplectic(g)) throw std::invalid_argument("ez_pullback: matrix not symplectic");
    auto [gt, det] = act(g, tau);
    (void)det;
    const EZValue h = ez_eval(gt, tol);
    auto [A, B, C, D] = blocks(g);
    (void)A;
    (void)B;
    const CMat P = (C.cast<cplx>() * tau + D.cast<cplx>()).inverse();
    // d(g tau) = P^t dtau P; L(a, j): coordinate a of the image of basis direction j
    std::array<CMat, 3> basis;
    for (auto& m : basis) m = CMat::Zero(2, 2);
    basis[0](0, 0) = 1;
    basis[1](0, 1) = basis[1](1, 0) = 1;
    basis[2](1, 1) = 1;
    cplx L[3][3];
    for (int j = 0; j < 3; ++j) {
        CMat d = P.transpose() * basis[j] * P;
        L[0][j] = d(0, 0);
        L[1][j] = d(0, 1);
        L[2][j] = d(1, 1);
    }
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    EZValue out{0.0, 0.0, 0.0};
    for (int k = 0; k < 3; ++k) {
        const int a = pairs[k][0], b = pairs[k][1];
        for (int l = 0; l < 3; ++l) {
            const int j = pairs[l][0], m = pairs[l][1];
            out[l] += h[k] * (L[a][j] * L[b][m] - L[a][m] * L[b][j]);
        }
    }
    return out;
}

double ez_two_form_check(const IntMat& g, const CMat& tau, double tol) {
    const EZValue base = ez_eval(tau, tol);
    const EZValue pb = ez_pullback(g, tau, tol);
    double scale = 0, diff = 0;
    for (int k = 0; k < 3; ++k) {
        scale = std::max(scale, std::abs(base[k]));
        diff = std::max(diff, std::abs(pb[k] - base[k]));
    }
    if (scale == 0) throw std::domain_error("ez_two_form_check: E_Z vanishes at tau");
    return diff / scale;
}

QuarterSeries ez_stratum8(int order) {
    // z1 = (X + iY)/2 with X, Y odd: N(z1) = (X^2+Y^2)/4, and 8 (i/2) conj(z1)^2 = i (X - iY)^2
    QuarterSeries s(1, order);
    const int lim = static_cast<int>(std::sqrt(double(order))) + 2;
    for (int X = -lim; X <= lim; ++X) {
        if (X % 2 == 0) continue;
        for (int Y = -lim; Y <= lim; ++Y) {
            if (Y % 2 == 0) continue;
            const int e = X * X + Y * Y;
            if (e > order) continue;
            const int x1y1 = (X - 1) / 2 + (Y - 1) / 2;
            GaussInt c = GaussInt{X, -Y} * GaussInt{X, -Y} * GaussInt{0, 1};
            if (mod(x1y1, 2)) c = -c;
            s.add_term({e, 0, 0}, c);
        }
    }
    return s;
}

PhiMatch ez_phi_match(int terms, double tol) {
    if (terms < 1) throw std::invalid_argument("ez_phi_match: terms >= 1");
    PhiMatch r;
    for (int order = 200;; order += 40) {
        QuarterSeries phi = phi_after_g0(fz_expansion(order));
        if (static_cast<int>(phi.size()) < terms && order < 4000) continue;
        QuarterSeries st = ez_stratum8(order);
        if (st.is_zero()) throw std::logic_error("ez_phi_match: stratum vanishes identically");
        r.order = order;
        r.leading_exponent = st.terms().begin()->first[0];
        const auto& [k0, c0] = *phi.terms().begin();
        GaussInt s0 = st.coeff(k0);
        if (c0.is_zero()) throw std::logic_error("ez_phi_match: no leading coefficient");
        r.scalar = cplx(double(s0.re), double(s0.im)) / 8.0 / cplx(double(c0.re), double(c0.im));
        r.support_ok = true;
        std::set<int> keys;
        for (const auto& [k, c] : phi.terms()) keys.insert(k[0]);
        for (const auto& [k, c] : st.terms()) keys.insert(k[0]);
        int used = 0;
        double res = 0;
        for (int e : keys) {
            if (used >= terms) break;
            GaussInt a = st.coeff(e), b = phi.coeff(e);
            cplx lhs = cplx(double(a.re), double(a.im)) / 8.0, rhs = r.scalar * cplx(double(b.re), double(b.im));
            res = std::max(res, std::abs(lhs - rhs));
            if (!a.is_zero() && (e % 2 || (e / 2) % 4 != 1)) r.support_ok = false;
            ++used;
        }
        r.terms = used;
        r.residual = res;
        (void)tol;
        return r;
    }
}

std::vector<CMat> ez_sample_points() {
    auto sym = [](cplx a, cplx b, cplx c) {
        CMat t(2, 2);
        t << a, b, b, c;
        return t;
    };
    return {sym({0.1, 1.8}, {0.2, 0.2}, {-0.2, 1.9}), sym({0, 2}, {0, 0}, {0, 2}),
            sym({-0.3, 1.6}, {0.1, -0.05}, {0.25, 1.7})};
}

std::vector<IntMat> gamma48_samples(int n, std::uint64_t seed, double min_eig) {
    std::mt19937_64 rng(seed);
    const auto gens = gamma48_generators();
    const auto pts = ez_sample_points();
    std::vector<IntMat> out;
    for (int tries = 0; static_cast<int>(out.size()) < n; ++tries) {
        if (tries > 100000) throw std::runtime_error("gamma48_samples: could not find well-conditioned words");
        IntMat M = random_word(gens, 3, rng);
        // C = 0 would only test translations and changes of basis
        if (blocks(M).C.isZero() || std::find(out.begin(), out.end(), M) != out.end()) continue;
        bool ok = true;
        for (const auto& t : pts) ok = ok && min_eigenvalue(act(M, t).first.imag()) >= min_eig;
        if (ok) out.push_back(M);
    }
    return out;
}

}  // namespace lab
