#pragma once

#include <stdexcept>

#include "rvf/bernoulli.hpp"
#include "rvf/qseries.hpp"

namespace rvf {

/// Divisor power sum sum_{d | n} d^k.
inline BigInt sigma(unsigned k, unsigned n) {
    if (n < 1) throw std::invalid_argument("sigma: n must be >= 1");
    BigInt s = 0;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += boost::multiprecision::pow(BigInt(d), k);
        const unsigned e = n / d;
        if (e != d) s += boost::multiprecision::pow(BigInt(e), k);
    }
    return s;
}

/// E_k = 1 - (2k / B_k) sum_{n >= 1} sigma_{k-1}(n) q^n, truncated at N.
inline QSeries<RationalRing> eisenstein(unsigned k, std::size_t N) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein: weight must be even, >= 2");
    QSeries<RationalRing> s(RationalRing{}, N);
    s.set_coeff(0, 1);
    const BigRational factor = -BigRational(2 * k) / bernoulli(k);
    for (std::size_t n = 1; n < N; ++n) {
        s.set_coeff(n, factor * BigRational(sigma(k - 1, static_cast<unsigned>(n))));
    }
    return s;
}

/// Delta = (E_4^3 - E_6^2) / 1728 = q - 24 q^2 + 252 q^3 - ...
inline QSeries<RationalRing> delta_series(std::size_t N) {
    const auto e4 = eisenstein(4, N);
    const auto e6 = eisenstein(6, N);
    return BigRational(1, 1728) * (e4 * e4 * e4 - e6 * e6);
}

/// Exact division by Delta; the input must vanish at q^0. The result is
/// one order shorter (Delta's unit coefficient sits at q^1).
inline QSeries<RationalRing> divide_by_delta(const QSeries<RationalRing>& s) {
    if (s.coeff(0) != 0) throw NotACuspForm("divide_by_delta: nonzero constant term");
    if (s.truncation() < 2) throw std::invalid_argument("divide_by_delta: truncation too short");
    const auto d = delta_series(s.truncation());
    QSeries<RationalRing> t(RationalRing{}, s.truncation() - 1);
    for (std::size_t n = 0; n < t.truncation(); ++n) {
        BigRational acc = s.coeff(n + 1);  // Delta_1 = 1
        for (std::size_t k = 2; k <= n + 1; ++k) {
            acc -= d.coeff(k) * t.coeff(n + 1 - k);
        }
        t.set_coeff(n, acc);
    }
    return t;
}

}  // namespace rvf
