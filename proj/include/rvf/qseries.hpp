#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvf/fp.hpp"

namespace rvf {

/// Truncated formal power series in q: coefficients for q^0 ... q^{N-1}.
/// Arithmetic never claims coefficients at or beyond the smaller operand
/// truncation.
template <class Ring>
class QSeries {
public:
    using Elem = typename Ring::Elem;

    QSeries(Ring ring, std::size_t truncation)
        : ring_(std::move(ring)), c_(truncation, ring_.zero()) {
        if (truncation == 0) throw std::invalid_argument("QSeries: empty truncation");
    }

    const Ring& ring() const { return ring_; }
    std::size_t truncation() const { return c_.size(); }
    const Elem& coeff(std::size_t n) const {
        if (n >= c_.size()) throw std::out_of_range("QSeries: coefficient beyond truncation");
        return c_[n];
    }
    void set_coeff(std::size_t n, const Elem& v) {
        if (n >= c_.size()) throw std::out_of_range("QSeries: coefficient beyond truncation");
        c_[n] = v;
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [&](const Elem& e) { return ring_.is_zero(e); });
    }

    QSeries truncated(std::size_t n) const {
        QSeries r(ring_, std::min(n, c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i];
        return r;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        a.check(b);
        QSeries r(a.ring_, std::min(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        a.check(b);
        QSeries r(a.ring_, std::min(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    QSeries operator-() const {
        QSeries r(ring_, c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        a.check(b);
        QSeries r(a.ring_, std::min(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            for (std::size_t j = 0; i + j < r.c_.size(); ++j) {
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend QSeries operator*(const Elem& c, const QSeries& s) {
        QSeries r(s.ring_, s.c_.size());
        for (std::size_t i = 0; i < s.c_.size(); ++i) r.c_[i] = c * s.c_[i];
        return r;
    }

    QSeries pow(unsigned e) const {
        QSeries base = *this;
        QSeries r(ring_, c_.size());
        r.c_[0] = ring_.one();
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        a.check(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t n = 0; n < c_.size(); ++n) {
            if (ring_.is_zero(c_[n])) continue;
            Elem mag = c_[n];
            const bool neg = is_negative(c_[n]);
            if (neg) mag = -c_[n];
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            const std::string coeff = ring_.str(mag);
            if (n == 0) {
                os << coeff;
            } else {
                if (coeff != "1") os << coeff << "*";
                os << "q";
                if (n > 1) os << "^" << n;
            }
        }
        if (!first) os << " + ";
        os << "O(q^" << c_.size() << ")";
        return os.str();
    }

private:
    void check(const QSeries& b) const {
        if (!(ring_ == b.ring_)) throw std::invalid_argument("QSeries: mixed rings");
    }

    Ring ring_;
    std::vector<Elem> c_;
};

/// q d/dq: coefficientwise n * s_n. The commutative-diagram operator is
/// the negative of this.
template <class Ring>
QSeries<Ring> theta(const QSeries<Ring>& s) {
    QSeries<Ring> r(s.ring(), s.truncation());
    for (std::size_t n = 1; n < s.truncation(); ++n) {
        r.set_coeff(n, s.ring().from_int(static_cast<long long>(n)) * s.coeff(n));
    }
    return r;
}

inline QSeries<FpRing> reduce_mod_p(const QSeries<RationalRing>& s, const FpRing& ring) {
    QSeries<FpRing> r(ring, s.truncation());
    for (std::size_t n = 0; n < s.truncation(); ++n) r.set_coeff(n, ring.from_rational(s.coeff(n)));
    return r;
}

}  // namespace rvf
