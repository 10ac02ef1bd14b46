#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "rvf/primes.hpp"
#include "rvf/rational.hpp"

namespace rvf {

/// p-adic valuation: an integer, or +infinity for the valuation of zero.
class PValuation {
public:
    static PValuation infinity() { return PValuation(true, 0); }
    static PValuation finite(long long v) { return PValuation(false, v); }

    bool is_infinite() const { return infinite_; }
    long long value() const {
        if (infinite_) throw std::logic_error("PValuation: value() of +infinity");
        return v_;
    }

    friend bool operator==(const PValuation& a, const PValuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend bool operator!=(const PValuation& a, const PValuation& b) { return !(a == b); }
    /// Order with +infinity greater than every finite value.
    friend bool operator<(const PValuation& a, const PValuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>=(const PValuation& a, const PValuation& b) { return !(a < b); }

    friend PValuation operator+(const PValuation& a, const PValuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.v_ + b.v_);
    }

    std::string str() const { return infinite_ ? "+inf" : std::to_string(v_); }

private:
    PValuation(bool inf, long long v) : infinite_(inf), v_(v) {}
    bool infinite_;
    long long v_;
};

inline PValuation ord_p(const BigInt& n, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("ord_p: p must be prime");
    if (n == 0) return PValuation::infinity();
    BigInt m = n < 0 ? BigInt(-n) : n;
    long long v = 0;
    const BigInt bp(p);
    while (m % bp == 0) {
        m /= bp;
        ++v;
    }
    return PValuation::finite(v);
}

inline PValuation ord_p(const BigRational& q, std::uint64_t p) {
    if (q == 0) return PValuation::infinity();
    return PValuation::finite(ord_p(num(q), p).value() - ord_p(den(q), p).value());
}

}  // namespace rvf
