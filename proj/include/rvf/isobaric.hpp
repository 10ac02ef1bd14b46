#pragma once

#include <map>
#include <string>

#include "rvf/eisenstein.hpp"
#include "rvf/mpoly.hpp"
#include "rvf/normalization.hpp"

namespace rvf {

inline VarNames isobaric_vars() { return make_vars({"u", "v"}); }

namespace detail {

inline MPoly<RationalRing> iso_monomial(unsigned a, unsigned b) {
    const RationalRing Q;
    Monomial m(2);
    m.set(0, static_cast<std::uint16_t>(a));
    m.set(1, static_cast<std::uint16_t>(b));
    MPoly<RationalRing> f(Q, isobaric_vars());
    f.add_term(m, BigRational(1));
    return f;
}

// Delta as an isobaric polynomial: (u^3 - v^2) / 1728.
inline MPoly<RationalRing> iso_delta() {
    return BigRational(1, 1728) * (iso_monomial(3, 0) - iso_monomial(0, 2));
}

inline MPoly<RationalRing> isobaric_rec(int k, const QSeries<RationalRing>& f) {
    const RationalRing Q;
    if (k < 4) {
        // Only constants in weight 0; nothing in weight 2 or below -2.
        for (std::size_t n = (k == 0 ? 1 : 0); n < f.truncation(); ++n) {
            if (f.coeff(n) != 0) {
                throw NonzeroResidual("isobaric_representation: residual of weight " +
                                      std::to_string(k) + " does not vanish");
            }
        }
        return MPoly<RationalRing>::constant(Q, isobaric_vars(), k == 0 ? f.coeff(0) : BigRational(0));
    }
    // Pick E_4^a E_6^b of weight k with minimal b in {0, 1}.
    const unsigned b = (k % 4 == 0) ? 0 : 1;
    const unsigned a = (static_cast<unsigned>(k) - 6 * b) / 4;
    const BigRational f0 = f.coeff(0);
    auto lead = eisenstein(4, f.truncation()).pow(a);
    if (b) lead = lead * eisenstein(6, f.truncation());
    const auto g = f - f0 * lead;
    if (g.is_zero()) return f0 * iso_monomial(a, b);
    const auto rest = isobaric_rec(k - 12, divide_by_delta(g));
    return f0 * iso_monomial(a, b) + iso_delta() * rest;
}

}  // namespace detail

/// Unique isobaric polynomial P(u, v) with weights deg(u) = 4, deg(v) = 6
/// and total weight k such that P(E_4, E_6) reproduces the given weight-k
/// q-expansion to its truncation. Subtracts f_0 E_4^a E_6^b, divides the
/// cusp form by Delta and recurses on weight k - 12.
inline MPoly<RationalRing> isobaric_representation(unsigned k, const QSeries<RationalRing>& f) {
    if (k < 4 || k % 2 != 0) {
        throw std::invalid_argument("isobaric_representation: weight must be even, >= 4");
    }
    if (f.truncation() < k / 12 + 2) {
        throw std::invalid_argument("isobaric_representation: truncation too short for weight " +
                                    std::to_string(k));
    }
    return detail::isobaric_rec(k, f);
}

inline std::size_t default_isobaric_truncation(unsigned k) {
    return std::max<std::size_t>(40, k / 12 + 5);
}

/// Smallest positive integer a such that a E_k is an integral isobaric
/// polynomial in E_4, E_6: the lcm of the coefficient denominators.
inline BigInt minimal_integral_multiplier(unsigned k) {
    const auto P = isobaric_representation(k, eisenstein(k, default_isobaric_truncation(k)));
    BigInt l = 1;
    for (const auto& [m, c] : P.terms()) l = boost::multiprecision::lcm(l, den(c));
    return l;
}

/// The ring homomorphism t_i -> s_i E_{2i} of the commutative diagram,
/// with s = (-1/12, 1/12, -1/216) in the scaled normalization and
/// s = (1, 1, 1) in the classical one.
inline QSeries<RationalRing> eval_at_eisenstein(const MPoly<RationalRing>& P, Normalization norm,
                                                std::size_t N) {
    if (P.nvars() != 3) throw std::invalid_argument("eval_at_eisenstein: expected 3 variables");
    const RationalRing Q;
    const auto scales = eisenstein_scales(norm);
    std::array<QSeries<RationalRing>, 3> base = {scales[0] * eisenstein(2, N),
                                                 scales[1] * eisenstein(4, N),
                                                 scales[2] * eisenstein(6, N)};
    std::array<std::vector<QSeries<RationalRing>>, 3> powers;
    for (int i = 0; i < 3; ++i) {
        powers[i].push_back(QSeries<RationalRing>(Q, N));
        powers[i][0].set_coeff(0, 1);
    }
    QSeries<RationalRing> acc(Q, N);
    for (const auto& [m, c] : P.terms()) {
        QSeries<RationalRing> t(Q, N);
        t.set_coeff(0, c);
        for (int i = 0; i < 3; ++i) {
            while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * base[i]);
            if (m[i] > 0) t = t * powers[i][m[i]];
        }
        acc = acc + t;
    }
    return acc;
}

}  // namespace rvf
