#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>
#include <thread>
#include <vector>

#include "rvf/bernoulli.hpp"
#include "rvf/fp.hpp"
#include "rvf/rational.hpp"
#include "rvf/valuation.hpp"

using namespace rvf;

TEST_CASE("bernoulli numbers, small values", "[exactnum]") {
    CHECK(bernoulli(0) == BigRational(1));
    CHECK(bernoulli(1) == BigRational(-1, 2));
    CHECK(bernoulli(2) == BigRational(1, 6));
    CHECK(bernoulli(3) == BigRational(0));
    CHECK(bernoulli(4) == BigRational(-1, 30));
    CHECK(bernoulli(6) == BigRational(1, 42));
    CHECK(bernoulli(12) == BigRational(-691, 2730));
}

TEST_CASE("bernoulli vanishes at odd k >= 3", "[exactnum]") {
    for (unsigned k = 3; k <= 61; k += 2) {
        CHECK(bernoulli(k) == 0);
    }
}

TEST_CASE("p-adic valuation", "[exactnum]") {
    CHECK(ord_p(bernoulli(4), 5) == PValuation::finite(-1));
    CHECK(ord_p(BigRational(0), 7) == PValuation::infinity());
    // ord_5 of B_{p+1} / (2(p+1)) at p = 5 is 0.
    const BigRational e3 = bernoulli(6) / 12;
    CHECK(ord_p(e3, 5) == PValuation::finite(0));
    CHECK(ord_p(BigRational(45, 8), 3) == PValuation::finite(2));
    CHECK(ord_p(BigRational(1, 9), 3) == PValuation::finite(-2));
}

TEST_CASE("B_{p+1}/(2(p+1)) is a p-adic unit", "[exactnum]") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        const BigRational v = bernoulli(static_cast<unsigned>(p) + 1) / BigRational(2 * (p + 1));
        CHECK(ord_p(v, p) == PValuation::finite(0));
    }
}

TEST_CASE("bernoulli cache tolerates concurrent readers", "[exactnum]") {
    std::vector<std::thread> pool;
    std::array<BigRational, 8> got;
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([&got, t] { got[t] = bernoulli(40 + 2 * (t % 3)); });
    }
    for (auto& th : pool) th.join();
    for (int t = 0; t < 8; ++t) CHECK(got[t] == bernoulli(40 + 2 * (t % 3)));
}

TEST_CASE("ord_p multiplicativity on random rationals", "[exactnum]") {
    std::mt19937_64 rng(42);
    for (std::uint64_t p : {5ull, 7ull, 11ull}) {
        for (int i = 0; i < 100; ++i) {
            long long an = static_cast<long long>(rng() % 2000) - 1000;
            long long ad = static_cast<long long>(rng() % 999) + 1;
            long long bn = static_cast<long long>(rng() % 2000) - 1000;
            long long bd = static_cast<long long>(rng() % 999) + 1;
            if (an == 0 || bn == 0) continue;
            const BigRational a(an, ad), b(bn, bd);
            CHECK(ord_p(a * b, p) == ord_p(a, p) + ord_p(b, p));
        }
    }
}

TEST_CASE("Von Staudt-Clausen examples", "[exactnum]") {
    auto r4 = check_von_staudt_clausen(4);
    CHECK(r4.is_integer);
    CHECK(r4.sum == BigRational(1));
    CHECK(r4.primes == std::vector<std::uint64_t>{2, 3, 5});

    auto r2 = check_von_staudt_clausen(2);
    CHECK(r2.is_integer);
    CHECK(r2.sum == BigRational(1));

    auto r12 = check_von_staudt_clausen(12);
    CHECK(r12.is_integer);
    CHECK(r12.primes == std::vector<std::uint64_t>{2, 3, 5, 7, 13});
}

TEST_CASE("Von Staudt-Clausen holds for all even k <= 60", "[exactnum]") {
    for (unsigned k = 2; k <= 60; k += 2) {
        CHECK(check_von_staudt_clausen(k).is_integer);
    }
}

TEST_CASE("Kummer congruence", "[exactnum]") {
    CHECK(check_kummer(2, 6, 5));
    CHECK(check_kummer(8, 2, 7));  // k = p+1 against k' = 2
    CHECK(check_kummer(2, 2, 11));
    CHECK_THROWS_AS(check_kummer(4, 8, 5), std::invalid_argument);   // (p-1) | k
    CHECK_THROWS_AS(check_kummer(2, 4, 7), std::invalid_argument);   // k != k' mod p-1
    CHECK_THROWS_AS(check_kummer(3, 9, 7), std::invalid_argument);   // odd
}

TEST_CASE("Kummer direct values at p = 5", "[exactnum]") {
    const FpRing F(5);
    CHECK(bernoulli(2) / 2 == BigRational(1, 12));
    CHECK(bernoulli(6) / 6 == BigRational(1, 252));
    CHECK(F.from_rational(BigRational(1, 12)).value() == 3);
    CHECK(F.from_rational(BigRational(1, 252)).value() == 3);
}

TEST_CASE("FpElement field axioms on sampled triples", "[exactnum]") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {5ull, 7ull, 13ull}) {
        const FpRing F(p);
        for (int i = 0; i < 50; ++i) {
            FpElement a = F.from_int(static_cast<long long>(rng() % p));
            FpElement b = F.from_int(static_cast<long long>(rng() % p));
            FpElement c = F.from_int(static_cast<long long>(rng() % p));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == F.zero());
            if (!a.is_zero()) CHECK(a * a.inv() == F.one());
        }
    }
}

TEST_CASE("FpElement misuse", "[exactnum]") {
    CHECK_THROWS_AS(FpRing(4), std::invalid_argument);
    CHECK_THROWS_AS(FpRing(3), std::invalid_argument);
    const FpRing F5(5), F7(7);
    CHECK_THROWS_AS(F5.one() + F7.one(), std::invalid_argument);
    CHECK_THROWS_AS(F5.zero().inv(), std::domain_error);
    CHECK_THROWS_AS(F5.from_rational(BigRational(1, 5)), DenominatorDivisibleByP);
}
