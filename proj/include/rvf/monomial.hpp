#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace rvf {

inline constexpr std::size_t kMaxVars = 6;

/// Exponent vector of fixed length nvars (one slot per ambient variable).
class Monomial {
public:
    Monomial() : n_(0) { e_.fill(0); }
    explicit Monomial(std::size_t nvars) : n_(nvars) {
        if (nvars > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
        e_.fill(0);
    }

    std::size_t nvars() const { return n_; }
    std::uint16_t operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, std::uint16_t v) { e_[i] = v; }

    long long degree() const {
        long long d = 0;
        for (std::size_t i = 0; i < n_; ++i) d += e_[i];
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] + b.e_[i]);
        return r;
    }

    bool divides(const Monomial& b) const {
        for (std::size_t i = 0; i < n_; ++i) {
            if (e_[i] > b.e_[i]) return false;
        }
        return true;
    }

    /// b / *this, assuming divisibility.
    Monomial divide_into(const Monomial& b) const {
        Monomial r(n_);
        for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(b.e_[i] - e_[i]);
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t i = 0; i < a.n_; ++i) {
            if (a.e_[i] != b.e_[i]) return false;
        }
        return true;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    Monomial extended(std::size_t extra) const {
        Monomial r(n_ + extra);
        for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i];
        return r;
    }
    Monomial restricted() const {
        Monomial r(n_ - 1);
        for (std::size_t i = 0; i + 1 < n_; ++i) r.e_[i] = e_[i];
        return r;
    }

private:
    std::array<std::uint16_t, kMaxVars> e_;
    std::size_t n_;
};

/// Positive integer weights per variable; (2, 4, 6) for (t_1, t_2, t_3).
struct WeightVector {
    std::array<int, kMaxVars> w{};
    std::size_t n = 0;

    static WeightVector standard(std::size_t nvars = 3) {
        WeightVector wv;
        wv.n = nvars;
        for (std::size_t i = 0; i < nvars; ++i) wv.w[i] = 2 * static_cast<int>(i + 1);
        return wv;
    }
    static WeightVector of(std::initializer_list<int> ws) {
        WeightVector wv;
        wv.n = ws.size();
        std::size_t i = 0;
        for (int x : ws) wv.w[i++] = x;
        return wv;
    }

    long long degree(const Monomial& m) const {
        long long d = 0;
        for (std::size_t i = 0; i < m.nvars() && i < n; ++i) d += static_cast<long long>(w[i]) * m[i];
        return d;
    }
};

namespace detail {
// Graded reverse lexicographic comparison restricted to variable slots
// [lo, hi); true iff a < b there.
inline bool grevlex_less_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    long long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}
}  // namespace detail

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    return detail::grevlex_less_range(a, b, 0, a.nvars());
}

/// Term order: graded reverse lexicographic, optionally with the last
/// `aux` variables as a leading elimination block.
struct MonomialOrder {
    std::size_t aux = 0;

    static MonomialOrder grevlex() { return MonomialOrder{0}; }
    static MonomialOrder eliminate_last(std::size_t naux) { return MonomialOrder{naux}; }

    bool less(const Monomial& a, const Monomial& b) const {
        const std::size_t n = a.nvars();
        if (aux == 0) return detail::grevlex_less_range(a, b, 0, n);
        const std::size_t split = n - aux;
        if (detail::grevlex_less_range(a, b, split, n)) return true;
        if (detail::grevlex_less_range(b, a, split, n)) return false;
        return detail::grevlex_less_range(a, b, 0, split);
    }
};

/// Map comparator placing grevlex-largest monomials first.
struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

}  // namespace rvf
