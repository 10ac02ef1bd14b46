#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "rvf/fp.hpp"
#include "rvf/primes.hpp"
#include "rvf/rational.hpp"
#include "rvf/valuation.hpp"

namespace rvf {

namespace detail {

inline std::mutex& bernoulli_mutex() {
    static std::mutex m;
    return m;
}

inline std::vector<BigRational>& bernoulli_cache() {
    static std::vector<BigRational> cache{BigRational(1)};  // B_0 = 1
    return cache;
}

}  // namespace detail

/// B_k with B_1 = -1/2, via the recurrence sum_{j=0}^{n} C(n+1,j) B_j = 0.
/// The cache grows monotonically; fills are serialized, reads are safe.
inline BigRational bernoulli(unsigned k) {
    std::lock_guard<std::mutex> lock(detail::bernoulli_mutex());
    auto& cache = detail::bernoulli_cache();
    while (cache.size() <= k) {
        const unsigned n = static_cast<unsigned>(cache.size());
        BigRational sum = 0;
        for (unsigned j = 0; j < n; ++j) {
            sum += BigRational(binomial(n + 1, j)) * cache[j];
        }
        cache.push_back(-sum / BigRational(n + 1));
    }
    return cache[k];
}

struct VonStaudtClausenReport {
    unsigned k = 0;
    std::vector<std::uint64_t> primes;  // primes p with (p-1) | k
    BigRational sum;                    // B_k + sum 1/p
    bool is_integer = false;
};

/// Von Staudt-Clausen: B_k + sum_{(p-1)|k} 1/p is an integer, k even >= 2.
inline VonStaudtClausenReport check_von_staudt_clausen(unsigned k) {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("check_von_staudt_clausen: k must be even and >= 2");
    }
    VonStaudtClausenReport r;
    r.k = k;
    r.sum = bernoulli(k);
    for (std::uint64_t d = 1; d <= k; ++d) {
        if (k % d == 0 && is_prime(d + 1)) {
            r.primes.push_back(d + 1);
            r.sum += BigRational(1, d + 1);
        }
    }
    r.is_integer = (den(r.sum) == 1);
    return r;
}

/// Kummer congruence: for even k, k' with k = k' (mod p-1) and (p-1) not
/// dividing either, B_k/k and B_{k'}/k' are p-integral and congruent mod p.
/// Rationals are compared through the reduction map num * den^{-1} in F_p.
inline bool check_kummer(unsigned k, unsigned k2, std::uint64_t p) {
    if (!is_prime(p) || p < 5) throw std::invalid_argument("check_kummer: p must be a prime >= 5");
    if (k % 2 != 0 || k2 % 2 != 0) throw std::invalid_argument("check_kummer: k, k' must be even");
    if (k % (p - 1) == 0 || k2 % (p - 1) == 0) {
        throw std::invalid_argument("check_kummer: (p-1) must divide neither k nor k'");
    }
    if (k % (p - 1) != k2 % (p - 1)) {
        throw std::invalid_argument("check_kummer: k and k' must agree mod p-1");
    }
    const BigRational a = bernoulli(k) / k;
    const BigRational b = bernoulli(k2) / k2;
    if (ord_p(a, p) < PValuation::finite(0)) return false;
    if (ord_p(b, p) < PValuation::finite(0)) return false;
    const FpRing F(p);
    return F.from_rational(a) == F.from_rational(b);
}

}  // namespace rvf
