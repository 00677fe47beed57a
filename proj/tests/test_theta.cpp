#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lab/lattice.hpp"
#include "lab/theta.hpp"

using namespace lab;

namespace {

CMat point(cplx a, cplx b, cplx c) {
    CMat t(2, 2);
    t << a, b, b, c;
    return t;
}

const CMat kTau = point({0.3, 1.1}, {0.2, 0.3}, {-0.1, 1.3});

std::vector<IntMat> gamma2_gens() {
    std::vector<IntMat> g;
    for (int i = 1; i <= 10; ++i) g.push_back(generator(i));
    return g;
}

}  // namespace

TEST_CASE("characteristics") {
    auto m = Characteristic::parse("1001");
    CHECK(m.code() == 9);
    CHECK(m.even());
    CHECK_FALSE(Characteristic::parse("1010").even());
    CHECK(even_characteristics().size() == 10);
    CHECK(Characteristic({3, 0}, {0, -1}).reduced() == Characteristic::parse("1001"));
    CHECK_THROWS(Characteristic::parse("10a1"));
}

TEST_CASE("theta values against an independent evaluation") {
    const CMat t = point({0, 2}, {0, 0.5}, {0, 2});
    CHECK(std::abs(theta_eval(Characteristic::parse("0000"), t, 1e-14) - 1.0076314714627206) < 1e-12);
    CHECK(std::abs(theta_eval(Characteristic::parse("0110"), t, 1e-14) - 0.411864016787135) < 1e-12);
    CHECK(std::abs(theta_eval(Characteristic::parse("1000"), t, 1e-14) - 0.4196571886398047) < 1e-12);
    CHECK(std::abs(theta_eval(Characteristic::parse("1111"), t, 1e-14) - 0.15014840203036617) < 1e-12);
    CHECK(std::abs(theta_eval(Characteristic::parse("0000"), kTau, 1e-14) - cplx(1.0747475061503309, 0.03670224647600248)) < 1e-12);
    CHECK(std::abs(theta_eval(Characteristic::parse("0011"), kTau, 1e-14) - cplx(0.9364772905922537, -0.04462791366768966)) < 1e-12);
    CHECK(std::abs(theta_eval(Characteristic::parse("1100"), kTau, 1e-14) - cplx(0.649952357519434, 0.01073088256482738)) < 1e-12);
    CMat t1(1, 1);
    t1(0, 0) = cplx(0, 1);
    CHECK(std::abs(theta_eval(Characteristic({0}, {0}), t1, 1e-15) - 1.0864348112133082) < 1e-13);
    CHECK(std::abs(theta_product_eval(fz_tuple(), point({0, 2}, 0, {0, 2}), 1e-14) - 0.17284482282711106) < 1e-12);
}

TEST_CASE("exact expansion agrees with numerics") {
    for (const auto& m : even_characteristics()) {
        auto s = theta_expansion(m, 400);
        CHECK(std::abs(evaluate_series(s, kTau) - theta_eval(m, kTau, 1e-14)) < 1e-10);
    }
    auto fz = fz_expansion(120);
    CHECK(std::abs(evaluate_series(fz, kTau) - theta_product_eval(fz_tuple(), kTau, 1e-14)) < 1e-8);
}

TEST_CASE("odd theta constants vanish") {
    CHECK(std::abs(theta_eval(Characteristic::parse("1111"), kTau, 1e-12)) > 0.01);
    CHECK(std::abs(theta_eval(Characteristic::parse("1010"), kTau, 1e-12)) < 1e-12);
    CHECK(theta_expansion(Characteristic::parse("0101"), 100).is_zero());
}

TEST_CASE("symplectic generators") {
    for (int i = 1; i <= 10; ++i) {
        CAPTURE(i);
        CHECK(is_symplectic(generator(i)));
        CHECK(in_gamma2(generator(i)));
        CHECK(is_symplectic(table_generator(i)));
    }
    for (const auto& g : gammaZ_generators()) CHECK(in_gamma2(g));
    for (const auto& g : gamma48_generators()) {
        CHECK(is_symplectic(g));
        CHECK(in_gamma48(g));
    }
    CHECK(in_gamma24(identity_sp(2)));
    CHECK_FALSE(in_gamma4(generator(1)));
}

TEST_CASE("squared transformation law on random Gamma(2) words (property)") {
    std::mt19937_64 rng(11);
    auto gens = gamma2_gens();
    int used = 0;
    while (used < 8) {
        IntMat M = random_word(gens, 3, rng);
        if (min_eigenvalue(act(M, kTau).first.imag()) < 0.05) continue;
        ++used;
        for (const auto& m : even_characteristics()) CHECK(igusa_squared_residual(m, M, kTau, 1e-13) < 1e-9);
    }
}

TEST_CASE("action is compatible with inverses and keeps parity (property)") {
    std::mt19937_64 rng(5);
    std::vector<IntMat> gens{j_matrix(2)};
    for (int i = 1; i <= 10; ++i) gens.push_back(generator(i));
    for (int trial = 0; trial < 30; ++trial) {
        IntMat M = random_word(gens, 4, rng);
        for (int c = 0; c < 16; ++c) {
            auto m = Characteristic::from_code(c);
            auto img = characteristic_action(M, m).image;
            CHECK(img.even() == m.even());
            CHECK(characteristic_action(sp_inverse(M), img).image == m);
        }
    }
}

TEST_CASE("character table values") {
    auto m = Characteristic::parse("0001"), n = Characteristic::parse("0110");
    // e7: i^{sum a}, e8: i^{sum b}
    CHECK(table1_char(m, n, 7) == GaussInt{1});
    CHECK(table1_char(m, n, 8) == GaussInt{0, 1});
    CHECK(table1_char(m, n, 5) == GaussInt{1});
    for (int i = 1; i <= 10; ++i) {
        GaussInt v = table1_char(m, n, i);
        CHECK(std::abs(slash_ratio({m, n}, table_generator(i), kTau, 1e-13) - cplx(double(v.re), double(v.im))) < 1e-9);
    }
}

TEST_CASE("printed e9 gives the conjugate of the table entry") {
    auto m = Characteristic::parse("0010"), n = Characteristic::parse("0000");
    GaussInt v = table1_char(m, n, 9);
    REQUIRE(v.im != 0);
    cplx printed = slash_ratio({m, n}, generator(9), kTau, 1e-13);
    CHECK(std::abs(printed - cplx(double(v.re), double(-v.im))) < 1e-9);
}

TEST_CASE("Gamma_Z predicate and F_Z invariance") {
    CHECK(gammaZ_tuple_predicate(fz_tuple()));
    for (const auto& g : gammaZ_generators()) CHECK(std::abs(slash_ratio(fz_tuple(), g, kTau, 1e-13) - 1.0) < 1e-9);
    GaussInt want{1};
    for (const auto& g : gammaZ_generators()) CHECK(verify_igusa_transformation(fz_tuple(), g, kTau, 1e-13, &want) < 1e-9);
    CHECK_THROWS(verify_igusa_transformation({Characteristic::parse("1010")}, generator(1), kTau, 1e-12));
}

TEST_CASE("orbits of six-tuples") {
    auto od = orbit_decomposition();
    CHECK(od.total() == 210);
    REQUIRE(od.orbits.size() == 3);
    CHECK(od.orbits[0].size() == 15);
    CHECK(od.orbits[1].size() == 15);
    CHECK(od.orbits[2].size() == 180);
    const auto* o = od.orbit_of(to_six_tuple(fz_tuple()));
    REQUIRE(o);
    CHECK(o->size() == 15);
    CHECK(from_six_tuple(to_six_tuple(fz_tuple())).size() == 6);
}

TEST_CASE("Phi after g0") {
    std::vector<Characteristic> ms;
    for (auto [a, b] : {std::pair{0, 0}, {0, 0}, {0, 1}, {0, 1}, {1, 0}, {1, 0}})
        ms.emplace_back(std::vector<int>{a}, std::vector<int>{b});
    auto lhs = phi_after_g0(fz_expansion(120));
    CHECK(lhs == product_expansion(ms, 120));
    CHECK(lhs.coeff(2) == GaussInt{4});
    CHECK(rescale4(lhs).coeff(8) == GaussInt{4});
}

TEST_CASE("weight-3 slash at the cusps") {
    std::vector<Characteristic> ms;
    for (auto [a, b] : {std::pair{0, 0}, {0, 0}, {0, 1}, {0, 1}, {1, 0}, {1, 0}})
        ms.emplace_back(std::vector<int>{a}, std::vector<int>{b});
    const cplx t1(0.13, 0.9);
    CMat tau1(1, 1);
    tau1(0, 0) = t1;
    cplx target = theta_product_eval(ms, tau1, 1e-14);
    CHECK(std::abs(fz_slash_at_cusp(g2_matrix(), t1, 8.0, 1e-14) - target) < 1e-10);
    CHECK(std::abs(fz_slash_at_cusp(g0_matrix(), t1, 8.0, 1e-14) + target) < 1e-10);
}

TEST_CASE("errors") {
    CMat bad = point({0, -1}, 0, {0, 1});
    CHECK_THROWS(theta_eval(Characteristic::parse("0000"), bad, 1e-10));
    CHECK_THROWS(generator(11));
}
