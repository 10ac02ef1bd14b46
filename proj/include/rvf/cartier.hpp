#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rvf/modular_ideal.hpp"

namespace rvf {

/// Elliptic curve y^2 = 4x^3 - g_2 x - g_3 over F_p, p >= 5.
class WeierstrassCurve {
public:
    WeierstrassCurve(const FpRing& ring, FpElement g2, FpElement g3)
        : ring_(ring), g2_(g2), g3_(g3) {
        const auto disc = g2 * g2 * g2 - ring.from_int(27) * g3 * g3;
        if (disc.is_zero()) throw std::domain_error("WeierstrassCurve: singular cubic");
    }

    const FpRing& ring() const { return ring_; }
    FpElement g2() const { return g2_; }
    FpElement g3() const { return g3_; }

private:
    FpRing ring_;
    FpElement g2_, g3_;
};

/// Coefficients c_i of f(x)^{(p-1)/2} = sum c_i x^i for f = 4x^3 - g_2 x - g_3.
struct CartierData {
    std::uint64_t p = 0;
    std::vector<FpElement> c;  // index i = 0 .. 3(p-1)/2
    FpElement c_pm1() const { return c[p - 1]; }
    FpElement c_pm2() const { return c[p - 2]; }
};

namespace detail {

using UniPoly = std::vector<FpElement>;  // dense, coefficient of x^i at index i

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b, const FpRing& F) {
    UniPoly r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline UniPoly uni_pow(UniPoly base, std::uint64_t e, const FpRing& F) {
    UniPoly r{F.one()};
    while (e > 0) {
        if (e & 1) r = uni_mul(r, base, F);
        e >>= 1;
        if (e) base = uni_mul(base, base, F);
    }
    return r;
}

}  // namespace detail

/// Exact coefficient list of f(x)^{(p-1)/2} by binary exponentiation.
inline CartierData half_power_coeffs(const WeierstrassCurve& curve) {
    const FpRing& F = curve.ring();
    const detail::UniPoly f = {-curve.g3(), -curve.g2(), F.zero(), F.from_int(4)};
    CartierData d;
    d.p = F.p;
    d.c = detail::uni_pow(f, (F.p - 1) / 2, F);
    d.c.resize(3 * (F.p - 1) / 2 + 1, F.zero());
    return d;
}

/// Hasse-Witt invariant: the coefficient of x^{p-1}; zero exactly for
/// supersingular curves.
inline FpElement hasse_witt(const WeierstrassCurve& curve) {
    return half_power_coeffs(curve).c_pm1();
}

inline bool is_supersingular(const WeierstrassCurve& curve) {
    return hasse_witt(curve).is_zero();
}

/// Coefficients (u, w) of a differential u dx/y + w x dx/y.
struct DifferentialCoords {
    FpElement u, w;
};

/// Cartier action in the basis (dx/y, x dx/y): the matrix
/// [[c_{p-1}, c_{p-2}], [0, 0]] composed with inverse Frobenius, which is
/// the identity over F_p.
inline DifferentialCoords cartier_apply(const WeierstrassCurve& curve,
                                        const DifferentialCoords& d) {
    const auto cd = half_power_coeffs(curve);
    return {d.u * cd.c_pm1() + d.w * cd.c_pm2(), curve.ring().zero()};
}

inline VarNames cartier_vars() { return make_vars({"x", "g_2", "g_3"}); }

struct Prop8Report {
    bool c_pm1_matches = false;  // x^{p-1} coefficient equals A (scaled)
    bool c_pm2_matches = false;  // x^{p-2} coefficient equals (1/12) B (scaled)
    MPoly<FpRing> c_pm1, c_pm2;

    explicit Prop8Report(const FpRing& F)
        : c_pm1(F, cartier_vars()), c_pm2(F, cartier_vars()) {}
    bool pass() const { return c_pm1_matches && c_pm2_matches; }
};

/// Symbolic comparison over F_p[g_2, g_3]: expand (4x^3 - g_2 x - g_3)^{(p-1)/2}
/// and match the x^{p-1} and x^{p-2} coefficients against the scaled A and
/// (1/12) B as exact polynomial identities.
inline Prop8Report verify_prop8_symbolic(std::uint64_t p) {
    const FpRing F(p);
    const VarNames gv = cartier_vars();
    Prop8Report rep(F);

    const auto x = MPoly<FpRing>::variable(F, gv, 0);
    const auto g2 = MPoly<FpRing>::variable(F, gv, 1);
    const auto g3 = MPoly<FpRing>::variable(F, gv, 2);
    const auto f = MPoly<FpRing>::constant(F, gv, 4) * x.pow(3) - g2 * x - g3;
    const auto power = f.pow(static_cast<unsigned>((p - 1) / 2));

    auto x_coefficient = [&](std::uint64_t e) {
        MPoly<FpRing> out(F, gv);
        for (const auto& [m, c] : power.terms()) {
            if (m[0] != e) continue;
            Monomial rest = m;
            rest.set(0, 0);
            out.add_term(rest, c);
        }
        return out;
    };
    rep.c_pm1 = x_coefficient(p - 1);
    rep.c_pm2 = x_coefficient(p - 2);

    const auto ab = ab_polynomials(p, Normalization::Scaled);
    const std::map<std::size_t, MPoly<FpRing>> to_g = {{1, g2}, {2, g3}};
    const auto A = ab.A.substitute(to_g);
    const auto B = ab.B.substitute(to_g);
    rep.c_pm1_matches = (rep.c_pm1 == A);
    rep.c_pm2_matches = (rep.c_pm2 == F.from_rational(BigRational(1, 12)) * B);
    return rep;
}

/// F_p-rational points of Zero(I_p): sample t_3 in a seeded order, scan t_2
/// solving A(t_2, t_3) = 1, set t_1 = -(1/12) B(t_2, t_3), and keep points
/// off the discriminant locus. Scaled normalization throughout.
inline std::vector<std::array<FpElement, 3>> find_points_on_Ip(std::uint64_t p,
                                                               std::size_t max_count,
                                                               std::uint64_t seed) {
    const FpRing F(p);
    const auto ab = ab_polynomials(p, Normalization::Scaled);
    const auto delta = discriminant(Normalization::Scaled, F);
    const auto minus_twelfth = -F.from_rational(BigRational(1, 12));

    std::vector<std::uint64_t> t3_order(p);
    std::iota(t3_order.begin(), t3_order.end(), 0);
    std::mt19937_64 rng(seed);
    for (std::size_t i = t3_order.size(); i > 1; --i) {
        std::swap(t3_order[i - 1], t3_order[rng() % i]);
    }

    std::vector<std::array<FpElement, 3>> points;
    for (const auto t3v : t3_order) {
        const FpElement t3 = F.from_int(static_cast<long long>(t3v));
        for (std::uint64_t t2v = 0; t2v < p && points.size() < max_count; ++t2v) {
            const FpElement t2 = F.from_int(static_cast<long long>(t2v));
            const std::vector<FpElement> pt0 = {F.zero(), t2, t3};
            if (ab.A.evaluate(pt0) != F.one()) continue;
            if (delta.evaluate(pt0).is_zero()) continue;
            const FpElement t1 = minus_twelfth * ab.B.evaluate(pt0);
            // postcondition: both generators of I_p vanish here
            if (!(ab.B.evaluate(pt0) + F.from_int(12) * t1).is_zero()) {
                throw std::logic_error("find_points_on_Ip: point escapes Zero(I_p)");
            }
            points.push_back({t1, t2, t3});
        }
        if (points.size() >= max_count) break;
    }
    return points;
}

/// Theorem 2 at one point of Zero(I_p) with Delta != 0: for the curve
/// (g_2, g_3) = (t_2, t_3), C fixes alpha = dx/y and kills
/// omega = (x + t_1) dx/y.
inline bool verify_thm2_point(std::uint64_t p, const std::array<FpElement, 3>& point) {
    const FpRing F(p);
    const auto ip = ideal_Ip(p, Normalization::Scaled);
    const std::vector<FpElement> pt(point.begin(), point.end());
    for (const auto& g : ip.gens) {
        if (!g.evaluate(pt).is_zero()) {
            throw std::invalid_argument("verify_thm2_point: point not on Zero(I_p)");
        }
    }
    if (discriminant(Normalization::Scaled, F).evaluate(pt).is_zero()) {
        throw std::invalid_argument("verify_thm2_point: point on the discriminant locus");
    }
    const WeierstrassCurve curve(F, point[1], point[2]);
    const auto alpha = cartier_apply(curve, {F.one(), F.zero()});
    if (alpha.u != F.one() || !alpha.w.is_zero()) return false;
    const auto omega = cartier_apply(curve, {point[0], F.one()});
    return omega.u.is_zero() && omega.w.is_zero();
}

}  // namespace rvf
