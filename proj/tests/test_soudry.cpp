#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lab/lattice.hpp"
#include "lab/soudry.hpp"

using namespace lab;

namespace {
CMat point(cplx a, cplx b, cplx c) {
    CMat t(2, 2);
    t << a, b, b, c;
    return t;
}
}  // namespace

TEST_CASE("values against an independent lattice sum") {
    auto h = ez_eval(point({0.1, 1.5}, {0.2, 0.1}, {-0.2, 1.6}), 1e-13);
    CHECK(std::abs(h[0] - cplx(0.0935804190005069, 0.014806784549561863)) < 1e-12);
    CHECK(std::abs(h[1] - cplx(-1.5107854045934857e-05, -1.14997558901937e-05)) < 1e-12);
    CHECK(std::abs(h[2] - cplx(2.7843818191939585e-05, -8.811240102083854e-06)) < 1e-12);
    auto d = ez_eval(point({0, 2}, 0, {0, 2}), 1e-13);
    CHECK(std::abs(d[0] - 0.043212411265942025) < 1e-12);
    CHECK(std::abs(d[1]) < 1e-12);
    CHECK(std::abs(d[2]) < 1e-12);
}

TEST_CASE("decay") {
    double prev = 1e9;
    for (double t : {2.0, 4.0, 8.0}) {
        auto h = ez_eval(point({0, t}, 0, {0, t}), 1e-14);
        double n = std::max({std::abs(h[0]), std::abs(h[1]), std::abs(h[2])});
        CHECK(n <= 2.0 * std::exp(-M_PI * t / 2));
        CHECK(n < prev);
        prev = n;
    }
}

TEST_CASE("truncation stability") {
    for (const auto& t : ez_sample_points()) {
        double r2 = radius2_for_tol(min_eigenvalue(t.imag()), 4, 1e-10, 2);
        auto a = ez_eval(t, 1e-10, r2), b = ez_eval(t, 1e-10, 4 * r2);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-10);
    }
}

TEST_CASE("2-form invariance") {
    const auto pts = ez_sample_points();
    CHECK(ez_two_form_check(identity_sp(2), pts[0], 1e-12) < 1e-12);
    for (const auto& M : gamma48_samples(6, 1)) {
        CHECK(in_gamma48(M));
        for (const auto& t : pts) CHECK(ez_two_form_check(M, t, 1e-12) < 1e-8);
    }
    auto gz = gammaZ_generators();
    auto names = gammaZ_generator_names();
    for (std::size_t k = 0; k < gz.size(); ++k) {
        CAPTURE(names[k]);
        double r = ez_two_form_check(gz[k], pts[1], 1e-12);
        // e1e4 and e1e6 act by -1
        if (names[k] == "e1e4" || names[k] == "e1e6") CHECK(std::abs(r - 2.0) < 1e-8);
        else CHECK(r < 1e-8);
    }
}

TEST_CASE("Phi of E_Z") {
    auto m = ez_phi_match(20, 1e-8);
    CHECK(m.terms == 20);
    CHECK(m.residual < 1e-12);
    CHECK(std::abs(m.scalar - 0.25) < 1e-15);
    CHECK(m.leading_exponent == 2);
    CHECK(m.support_ok);
    auto s = ez_stratum8(40);
    CHECK(s.coeff(2) == GaussInt{8});
    CHECK(s.coeff(10) == GaussInt{-48});
}

TEST_CASE("errors") {
    CHECK_THROWS(ez_eval(point({0, -1}, 0, {0, 1}), 1e-8));
    CHECK_THROWS(ez_eval(point({0, 1}, 0, {0, 1}), 0));
}
