#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rvf/errors.hpp"
#include "rvf/primes.hpp"
#include "rvf/rational.hpp"

namespace rvf {

/// Element of the prime field F_p, p >= 5. Carries its modulus; mixing
/// moduli in arithmetic is an error.
class FpElement {
public:
    FpElement() : v_(0), p_(0) {}
    FpElement(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend FpElement operator+(const FpElement& a, const FpElement& b) {
        a.check(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return FpElement(s, a.p_, 0);
    }
    friend FpElement operator-(const FpElement& a, const FpElement& b) {
        a.check(b);
        return FpElement(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_, 0);
    }
    friend FpElement operator*(const FpElement& a, const FpElement& b) {
        a.check(b);
        using u128 = unsigned __int128;
        return FpElement(static_cast<std::uint64_t>(static_cast<u128>(a.v_) * b.v_ % a.p_), a.p_, 0);
    }
    FpElement operator-() const { return FpElement(v_ == 0 ? 0 : p_ - v_, p_, 0); }

    FpElement& operator+=(const FpElement& b) { return *this = *this + b; }
    FpElement& operator-=(const FpElement& b) { return *this = *this - b; }
    FpElement& operator*=(const FpElement& b) { return *this = *this * b; }

    FpElement pow(std::uint64_t e) const {
        FpElement base = *this;
        FpElement r(1 % p_, p_, 0);
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    FpElement inv() const {
        if (v_ == 0) throw std::domain_error("FpElement: inverse of zero");
        return pow(p_ - 2);
    }

    friend FpElement operator/(const FpElement& a, const FpElement& b) { return a * b.inv(); }

    friend bool operator==(const FpElement& a, const FpElement& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FpElement& a, const FpElement& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    FpElement(std::uint64_t v, std::uint64_t p, int) : v_(v), p_(p) {}
    void check(const FpElement& b) const {
        if (p_ == 0 || p_ != b.p_) throw std::invalid_argument("FpElement: mixed moduli");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

inline bool is_negative(const BigRational& q) { return q < 0; }
inline bool is_negative(const FpElement&) { return false; }

/// Coefficient-ring descriptor for F_p, p a prime >= 5.
struct FpRing {
    using Elem = FpElement;

    explicit FpRing(std::uint64_t prime) : p(prime) {
        if (p < 5 || !is_prime(p)) {
            throw std::invalid_argument("FpRing: modulus must be a prime >= 5");
        }
    }

    std::uint64_t p;

    Elem zero() const { return Elem(0, p); }
    Elem one() const { return Elem(1, p); }
    Elem from_int(long long n) const {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Elem(static_cast<std::uint64_t>(r), p);
    }
    Elem from_bigint(const BigInt& n) const {
        BigInt r = n % p;
        if (r < 0) r += p;
        return Elem(r.convert_to<std::uint64_t>(), p);
    }
    /// Reduction map on p-integral rationals: num * den^{-1} in F_p.
    Elem from_rational(const BigRational& q) const {
        Elem d = from_bigint(den(q));
        if (d.is_zero()) {
            throw DenominatorDivisibleByP("reduction mod " + std::to_string(p) +
                                          ": denominator of " + q.str() + " vanishes");
        }
        return from_bigint(num(q)) / d;
    }
    bool is_zero(const Elem& e) const { return e.is_zero(); }
    Elem inv(const Elem& e) const { return e.inv(); }
    std::string str(const Elem& e) const { return e.str(); }

    friend bool operator==(const FpRing& a, const FpRing& b) { return a.p == b.p; }
    friend bool operator!=(const FpRing& a, const FpRing& b) { return a.p != b.p; }
};

/// Coefficient-ring descriptor for Q.
struct RationalRing {
    using Elem = BigRational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long n) const { return Elem(n); }
    Elem from_rational(const BigRational& q) const { return q; }
    bool is_zero(const Elem& e) const { return e == 0; }
    Elem inv(const Elem& e) const {
        if (e == 0) throw std::domain_error("RationalRing: inverse of zero");
        return Elem(1) / e;
    }
    std::string str(const Elem& e) const { return e.str(); }

    friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
    friend bool operator!=(const RationalRing&, const RationalRing&) { return false; }
};

}  // namespace rvf
