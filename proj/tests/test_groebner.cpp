#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rvf/groebner.hpp"

using namespace rvf;

namespace {

const FpRing F5(5);

MPoly<FpRing> fvar(std::size_t i) { return MPoly<FpRing>::variable(F5, t_vars(), i); }
MPoly<FpRing> fconst(long long c) { return MPoly<FpRing>::constant(F5, t_vars(), c); }

MPoly<FpRing> random_fpoly(std::mt19937_64& rng, int max_terms = 4, int max_deg = 2) {
    MPoly<FpRing> f(F5, t_vars());
    const int nt = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < nt; ++t) {
        Monomial m(3);
        for (std::size_t i = 0; i < 3; ++i) m.set(i, static_cast<std::uint16_t>(rng() % (max_deg + 1)));
        f.add_term(m, F5.from_int(static_cast<long long>(rng() % 5)));
    }
    return f;
}

}  // namespace

TEST_CASE("membership basics", "[groebner]") {
    const auto t1 = fvar(0), t2 = fvar(1), t3 = fvar(2);
    const auto one = fconst(1);

    const Ideal<FpRing> I(F5, t_vars(), {t2 - one, t3 - t1});
    CHECK(ideal_membership(t2 - one, I));
    CHECK(ideal_membership((t3 - t1) * t2 + (t2 - one) * t3, I));
    CHECK_FALSE(ideal_membership(t1, Ideal<FpRing>(F5, t_vars(), {t2, t3})));
}

TEST_CASE("normal form agrees with membership on random inputs", "[groebner]") {
    const auto t1 = fvar(0), t2 = fvar(1), t3 = fvar(2);
    const Ideal<FpRing> I(F5, t_vars(), {t1 * t1 - t2, t2 * t3 - fconst(1)});
    const auto gb = groebner(I);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_fpoly(rng);
        const bool memb = ideal_membership(f, I);
        CHECK(memb == normal_form(f, gb).is_zero());
        // elements built from the generators are members
        const auto g = f * I.gens[0] + random_fpoly(rng) * I.gens[1];
        CHECK(ideal_membership(g, I));
    }
}

TEST_CASE("groebner is idempotent on reduced bases", "[groebner]") {
    const auto t1 = fvar(0), t2 = fvar(1), t3 = fvar(2);
    for (const auto& gens : {std::vector<MPoly<FpRing>>{t1 * t2 - t3, t2 * t2 - t1},
                             std::vector<MPoly<FpRing>>{t1 * t1 * t1 - t2, t1 * t2 - fconst(2)}}) {
        const Ideal<FpRing> I(F5, t_vars(), gens);
        const auto gb = groebner(I);
        const auto gb2 = groebner(Ideal<FpRing>(F5, t_vars(), gb));
        CHECK(gb == gb2);
    }
}

TEST_CASE("ideal intersection", "[groebner]") {
    const auto t2 = fvar(1), t3 = fvar(2);

    // coprime principal ideals: <t_2> cap <t_3> = <t_2 t_3>
    const auto I = Ideal<FpRing>(F5, t_vars(), {t2});
    const auto J = Ideal<FpRing>(F5, t_vars(), {t3});
    const auto IJ = ideal_intersection(I, J);
    REQUIRE(IJ.gens.size() == 1);
    CHECK(IJ.gens[0] == t2 * t3);

    // containment: <t_2> cap <t_2, t_3> = <t_2>
    const auto K = ideal_intersection(I, Ideal<FpRing>(F5, t_vars(), {t2, t3}));
    CHECK(ideal_membership(t2, K));
    for (const auto& g : K.gens) CHECK(ideal_membership(g, I));
}

TEST_CASE("intersection of an ideal with itself", "[groebner]") {
    const auto t1 = fvar(0), t2 = fvar(1), t3 = fvar(2);
    const Ideal<FpRing> I(F5, t_vars(), {t1 * t1 - t2, t3 - t1});
    const auto II = ideal_intersection(I, I);
    for (const auto& g : II.gens) CHECK(ideal_membership(g, I));
    for (const auto& g : I.gens) CHECK(ideal_membership(g, II));
}

TEST_CASE("radical membership via Rabinowitsch", "[groebner]") {
    const auto t1 = fvar(0), t2 = fvar(1), t3 = fvar(2);

    CHECK(radical_membership(t2, Ideal<FpRing>(F5, t_vars(), {t2 * t2})));
    CHECK_FALSE(radical_membership(t1, Ideal<FpRing>(F5, t_vars(), {t2, t3})));

    // principal squarefree cases: f in sqrt(<g>) iff every irreducible
    // factor of g divides f (degree <= 4 hand-built examples over F_5)
    const auto g = t1 * (t2 - t3);
    const Ideal<FpRing> P(F5, t_vars(), {g});
    CHECK(radical_membership(t1 * (t2 - t3), P));
    CHECK(radical_membership(t1 * t1 * (t2 - t3) * t3, P));
    CHECK_FALSE(radical_membership(t1, P));
    CHECK_FALSE(radical_membership(t2 - t3, P));
    CHECK_FALSE(radical_membership(t1 * (t2 + t3), P));

    const auto h = (t1 - t2) * (t1 + t2);
    const Ideal<FpRing> P2(F5, t_vars(), {h});
    CHECK(radical_membership((t1 - t2) * (t1 + t2) * t3, P2));
    CHECK_FALSE(radical_membership((t1 - t2) * t3, P2));
}

TEST_CASE("radical membership of powers", "[groebner]") {
    const auto t1 = fvar(0), t2 = fvar(1), t3 = fvar(2);
    const auto delta = t2.pow(3) - t3 * t3;
    const Ideal<FpRing> I(F5, t_vars(), {delta.pow(3) * t1, delta * delta * t2 * t2});
    CHECK(radical_membership(delta * t1 * t2, I));
    CHECK_FALSE(radical_membership(delta, I));
}
