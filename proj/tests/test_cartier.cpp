#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rvf/cartier.hpp"

using namespace rvf;

TEST_CASE("half-power coefficients at p = 5", "[cartier]") {
    const FpRing F(5);
    // (4x^3 - g_2 x - g_3)^2: c_4 = -8 g_2 = 2 g_2, c_3 = -8 g_3 = 2 g_3
    const WeierstrassCurve e1(F, F.from_int(3), F.from_int(2));
    const auto d1 = half_power_coeffs(e1);
    CHECK(d1.c.size() == 3 * (5 - 1) / 2 + 1);
    CHECK(d1.c_pm1() == F.from_int(2) * F.from_int(3));
    CHECK(d1.c_pm2() == F.from_int(2) * F.from_int(2));

    const WeierstrassCurve e2(F, F.zero(), F.one());
    CHECK(half_power_coeffs(e2).c_pm1().is_zero());
    CHECK(is_supersingular(e2));
    CHECK_FALSE(is_supersingular(e1));

    CHECK_THROWS_AS(WeierstrassCurve(F, F.zero(), F.zero()), std::domain_error);
}

TEST_CASE("hasse_witt at p = 5 equals 2 g_2", "[cartier]") {
    const FpRing F(5);
    for (std::uint64_t g2 = 0; g2 < 5; ++g2) {
        for (std::uint64_t g3 = 0; g3 < 5; ++g3) {
            const auto a = F.from_int(static_cast<long long>(g2));
            const auto b = F.from_int(static_cast<long long>(g3));
            if ((a * a * a - F.from_int(27) * b * b).is_zero()) continue;
            CHECK(hasse_witt(WeierstrassCurve(F, a, b)) == F.from_int(2) * a);
        }
    }
}

TEST_CASE("cartier_apply", "[cartier]") {
    const FpRing F(5);
    // supersingular: alpha (coords (1, 0)) is annihilated
    const WeierstrassCurve ss(F, F.zero(), F.one());
    const auto r0 = cartier_apply(ss, {F.one(), F.zero()});
    CHECK(r0.u.is_zero());
    CHECK(r0.w.is_zero());

    // (g_2, g_3) = (3, 2): c_4 = 6 = 1, and with t_1 = 3 t_3 = 1 the
    // second-kind form (t_1, 1) dies: t_1 c_4 + c_3 = 1 + 4 = 0 mod 5
    const WeierstrassCurve e(F, F.from_int(3), F.from_int(2));
    const auto a = cartier_apply(e, {F.one(), F.zero()});
    CHECK(a.u == F.one());
    CHECK(a.w.is_zero());
    const auto o = cartier_apply(e, {F.from_int(1), F.one()});
    CHECK(o.u.is_zero());
    CHECK(o.w.is_zero());
}

TEST_CASE("symbolic coefficients match A and B/12", "[cartier]") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        const auto rep = verify_prop8_symbolic(p);
        CHECK(rep.c_pm1_matches);
        CHECK(rep.c_pm2_matches);
    }
    // p = 5 explicitly: c_4 = 2 g_2, c_3 = 2 g_3
    const auto rep5 = verify_prop8_symbolic(5);
    CHECK(rep5.c_pm1.str() == "2*g_2");
    CHECK(rep5.c_pm2.str() == "2*g_3");
}

TEST_CASE("symbolic coefficients are weighted homogeneous", "[cartier]") {
    const auto w = WeightVector::of({0, 4, 6});
    for (std::uint64_t p : {5ull, 7ull, 11ull}) {
        const auto rep = verify_prop8_symbolic(p);
        CHECK(rep.c_pm1.is_homogeneous(w));
        CHECK(rep.c_pm1.weighted_degree(w) == static_cast<long long>(p) - 1);
        CHECK(rep.c_pm2.is_homogeneous(w));
        CHECK(rep.c_pm2.weighted_degree(w) == static_cast<long long>(p) + 1);
    }
}

TEST_CASE("pointwise agrees with symbolic on random curves", "[cartier]") {
    std::mt19937_64 rng(23);
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        const FpRing F(p);
        const auto rep = verify_prop8_symbolic(p);
        int tested = 0;
        while (tested < 20) {
            const auto g2 = F.from_int(static_cast<long long>(rng() % p));
            const auto g3 = F.from_int(static_cast<long long>(rng() % p));
            if ((g2 * g2 * g2 - F.from_int(27) * g3 * g3).is_zero()) continue;
            ++tested;
            const WeierstrassCurve curve(F, g2, g3);
            const std::vector<FpElement> pt = {F.zero(), g2, g3};
            CHECK(hasse_witt(curve) == rep.c_pm1.evaluate(pt));
        }
    }
}

TEST_CASE("supersingular locus at p = 5 is the zero locus of A", "[cartier]") {
    const FpRing F(5);
    const auto ab = ab_polynomials(5, Normalization::Scaled);
    for (std::uint64_t g2 = 0; g2 < 5; ++g2) {
        for (std::uint64_t g3 = 0; g3 < 5; ++g3) {
            const auto a = F.from_int(static_cast<long long>(g2));
            const auto b = F.from_int(static_cast<long long>(g3));
            if ((a * a * a - F.from_int(27) * b * b).is_zero()) continue;
            const bool ss = is_supersingular(WeierstrassCurve(F, a, b));
            const bool azero = ab.A.evaluate({F.zero(), a, b}).is_zero();
            CHECK(ss == azero);
        }
    }
}

TEST_CASE("supersingularity agrees with point counting", "[cartier]") {
    // independent route: for p >= 5 the curve is supersingular iff
    // #E(F_p) = p + 1 (the Frobenius trace vanishes by the Hasse bound)
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        const FpRing F(p);
        auto is_square = [&](const FpElement& a) {
            for (std::uint64_t y = 0; y < p; ++y) {
                if (F.from_int(static_cast<long long>(y)).pow(2) == a) return true;
            }
            return false;
        };
        for (std::uint64_t g2 = 0; g2 < p; ++g2) {
            for (std::uint64_t g3 = 0; g3 < p; ++g3) {
                const auto a = F.from_int(static_cast<long long>(g2));
                const auto b = F.from_int(static_cast<long long>(g3));
                if ((a * a * a - F.from_int(27) * b * b).is_zero()) continue;
                std::uint64_t count = 1;  // point at infinity
                for (std::uint64_t x = 0; x < p; ++x) {
                    const auto xe = F.from_int(static_cast<long long>(x));
                    const auto fx = F.from_int(4) * xe.pow(3) - a * xe - b;
                    if (fx.is_zero()) count += 1;
                    else if (is_square(fx)) count += 2;
                }
                const WeierstrassCurve curve(F, a, b);
                CHECK(is_supersingular(curve) == (count == p + 1));
            }
        }
    }
}

TEST_CASE("points on Zero(I_p) and Theorem 2", "[cartier]") {
    // p = 5: A = 12 t_2 = 1 forces t_2 = 3, and t_1 = 3 t_3
    const FpRing F(5);
    const auto pts5 = find_points_on_Ip(5, 10, 1);
    REQUIRE(!pts5.empty());
    for (const auto& pt : pts5) {
        CHECK(pt[1] == F.from_int(3));
        CHECK(pt[0] == F.from_int(3) * pt[2]);
        CHECK(verify_thm2_point(5, pt));
    }

    // (0, 3, 0) lies on the curve and passes both identities
    CHECK(verify_thm2_point(5, {F.zero(), F.from_int(3), F.zero()}));
    CHECK(verify_thm2_point(5, {F.one(), F.from_int(3), F.from_int(2)}));

    for (std::uint64_t p : {7ull, 11ull, 13ull}) {
        const auto pts = find_points_on_Ip(p, 3, 42);
        CHECK(!pts.empty());
        for (const auto& pt : pts) CHECK(verify_thm2_point(p, pt));
    }
}

TEST_CASE("verify_thm2_point rejects bad input", "[cartier]") {
    const FpRing F(5);
    // (0, 0, 0) is not on Zero(I_5)
    CHECK_THROWS_AS(verify_thm2_point(5, {F.zero(), F.zero(), F.zero()}), std::invalid_argument);
}
