#pragma once

#include <cstdint>

#include "rvf/vector_field.hpp"

namespace rvf {

template <class Ring>
struct ABPolynomials {
    MPoly<Ring> A;  // weighted-homogeneous of degree p-1, variables t_2, t_3
    MPoly<Ring> B;  // weighted-homogeneous of degree p+1
};

/// A, B over Q in the t-ring: isobaric representations of E_{p-1} and
/// E_{p+1} with E_4 -> t_2, E_6 -> t_3; the scaled normalization applies
/// the substitution t_2 -> 12 t_2, t_3 -> -216 t_3.
inline ABPolynomials<RationalRing> ab_polynomials_q(std::uint64_t p, Normalization norm) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("ab_polynomials: p must be a prime >= 5");
    const RationalRing Q;
    const VarNames tv = t_vars();
    const unsigned k1 = static_cast<unsigned>(p) - 1;
    const unsigned k2 = static_cast<unsigned>(p) + 1;
    const auto PA = isobaric_representation(k1, eisenstein(k1, default_isobaric_truncation(k1)));
    const auto PB = isobaric_representation(k2, eisenstein(k2, default_isobaric_truncation(k2)));

    const auto t2 = MPoly<RationalRing>::variable(Q, tv, 1);
    const auto t3 = MPoly<RationalRing>::variable(Q, tv, 2);
    auto A = PA.substitute({{0, t2}, {1, t3}});
    auto B = PB.substitute({{0, t2}, {1, t3}});
    if (norm == Normalization::Scaled) {
        const std::map<std::size_t, MPoly<RationalRing>> scale = {
            {1, BigRational(12) * t2}, {2, BigRational(-216) * t3}};
        A = A.substitute(scale);
        B = B.substitute(scale);
    }
    return {A, B};
}

/// A, B reduced into F_p. Proposition 6 guarantees the reduction exists;
/// DenominatorDivisibleByP escaping from here would falsify it.
inline ABPolynomials<FpRing> ab_polynomials(std::uint64_t p, Normalization norm) {
    const auto q = ab_polynomials_q(p, norm);
    const FpRing F(p);
    ABPolynomials<FpRing> r{reduce_mod_p(q.A, F), reduce_mod_p(q.B, F)};
    const auto w = WeightVector::standard();
    if (r.A.weighted_degree(w) != static_cast<long long>(p) - 1 || !r.A.is_homogeneous(w) ||
        r.B.weighted_degree(w) != static_cast<long long>(p) + 1 || !r.B.is_homogeneous(w)) {
        throw std::logic_error("ab_polynomials: unexpected weighted degrees");
    }
    return r;
}

/// Generators of the ideal of relations among the Eisenstein solution
/// coordinates: <A - 1, B + 12 t_1> scaled, <A - 1, B - t_1> classical.
inline Ideal<FpRing> ideal_Ip(std::uint64_t p, Normalization norm) {
    const FpRing F(p);
    const VarNames tv = t_vars();
    const auto ab = ab_polynomials(p, norm);
    const auto one = MPoly<FpRing>::constant(F, tv, 1);
    const auto t1 = MPoly<FpRing>::variable(F, tv, 0);
    const auto second = norm == Normalization::Scaled
                            ? ab.B + MPoly<FpRing>::constant(F, tv, 12) * t1
                            : ab.B - t1;
    return Ideal<FpRing>(F, tv, {ab.A - one, second});
}

struct FirstIntegralResult {
    MPoly<FpRing> f;
    bool stated_sign = true;  // false when only the opposite sign worked
};

/// First integral of the reduced field: candidate B + 12 t_1 A (scaled)
/// or B - t_1 A (classical); tries the opposite sign if v(f) != 0 and
/// throws FirstIntegralFails when neither is annihilated.
inline FirstIntegralResult first_integral(std::uint64_t p, Normalization norm) {
    const FpRing F(p);
    const VarNames tv = t_vars();
    const auto ab = ab_polynomials(p, norm);
    const auto vf = make_ramanujan(norm, F);
    const auto t1 = MPoly<FpRing>::variable(F, tv, 0);
    const auto coeff = norm == Normalization::Scaled ? MPoly<FpRing>::constant(F, tv, 12) * t1
                                                     : -t1;
    const auto stated = ab.B + coeff * ab.A;
    const auto w = WeightVector::standard();
    for (bool sign : {true, false}) {
        const auto f = sign ? stated : ab.B - coeff * ab.A;
        if (!apply(vf, f).is_zero()) continue;
        if (!f.is_homogeneous(w) || f.weighted_degree(w) != static_cast<long long>(p) + 1) {
            throw std::logic_error("first_integral: candidate not homogeneous of degree p+1");
        }
        return {f, sign};
    }
    throw FirstIntegralFails("first_integral: neither sign is annihilated at p = " +
                             std::to_string(p));
}

struct RegularFirstIntegralReport {
    bool vA_in_radical_f = false;   // v(A) vanishes on f = 0
    bool curve_matches_Ip = false;  // <A - 1, f> and I_p agree by mutual membership
    FirstIntegralResult fi{MPoly<FpRing>(FpRing(5), t_vars())};
};

/// v restricted to f = 0 has the regular first integral A; the curve
/// A = 1, f = 0 is the curve cut out by I_p.
inline RegularFirstIntegralReport regular_first_integral_check(std::uint64_t p, Normalization norm) {
    const FpRing F(p);
    const VarNames tv = t_vars();
    RegularFirstIntegralReport rep;
    rep.fi = first_integral(p, norm);
    const auto ab = ab_polynomials(p, norm);
    const auto vf = make_ramanujan(norm, F);

    rep.vA_in_radical_f =
        radical_membership(apply(vf, ab.A), Ideal<FpRing>(F, tv, {rep.fi.f}));

    const auto one = MPoly<FpRing>::constant(F, tv, 1);
    const Ideal<FpRing> curve(F, tv, {ab.A - one, rep.fi.f});
    const auto ip = ideal_Ip(p, norm);
    const auto gb_curve = groebner(curve);
    const auto gb_ip = groebner(ip);
    bool ok = true;
    for (const auto& g : curve.gens) ok = ok && ideal_membership(g, gb_ip);
    for (const auto& g : ip.gens) ok = ok && ideal_membership(g, gb_curve);
    rep.curve_matches_Ip = ok;
    return rep;
}

}  // namespace rvf
