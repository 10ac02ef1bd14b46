#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvf/fp.hpp"
#include "rvf/monomial.hpp"

namespace rvf {

using VarNames = std::shared_ptr<const std::vector<std::string>>;

inline VarNames make_vars(std::vector<std::string> names) {
    if (names.size() > kMaxVars) throw std::invalid_argument("make_vars: too many variables");
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline VarNames t_vars() { return make_vars({"t_1", "t_2", "t_3"}); }

inline VarNames extended_vars(const VarNames& vars, const std::string& extra) {
    std::vector<std::string> names = *vars;
    names.push_back(extra);
    return make_vars(std::move(names));
}

inline VarNames restricted_vars(const VarNames& vars) {
    std::vector<std::string> names = *vars;
    names.pop_back();
    return make_vars(std::move(names));
}

inline bool same_vars(const VarNames& a, const VarNames& b) {
    return a == b || *a == *b;
}

/// Sparse multivariate polynomial over Q or F_p. Terms are kept in
/// descending grevlex order; no zero coefficients are stored.
template <class Ring>
class MPoly {
public:
    using Elem = typename Ring::Elem;
    using TermMap = std::map<Monomial, Elem, GrevlexDesc>;

    MPoly(Ring ring, VarNames vars) : ring_(std::move(ring)), vars_(std::move(vars)) {}

    static MPoly zero(const Ring& ring, const VarNames& vars) { return MPoly(ring, vars); }
    static MPoly constant(const Ring& ring, const VarNames& vars, const Elem& c) {
        MPoly f(ring, vars);
        f.add_term(Monomial(vars->size()), c);
        return f;
    }
    static MPoly constant(const Ring& ring, const VarNames& vars, long long c) {
        return constant(ring, vars, ring.from_int(c));
    }
    static MPoly variable(const Ring& ring, const VarNames& vars, std::size_t i) {
        if (i >= vars->size()) throw std::invalid_argument("MPoly::variable: index out of range");
        Monomial m(vars->size());
        m.set(i, 1);
        MPoly f(ring, vars);
        f.add_term(m, ring.one());
        return f;
    }

    const Ring& ring() const { return ring_; }
    const VarNames& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }
    Elem constant_value() const {
        auto it = terms_.find(Monomial(nvars()));
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    void add_term(const Monomial& m, const Elem& c) {
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_compatible(b);
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.check_compatible(b);
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r(ring_, vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_compatible(b);
        MPoly r(a.ring_, a.vars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }
    friend MPoly operator*(const Elem& c, const MPoly& f) {
        MPoly r(f.ring_, f.vars_);
        for (const auto& [m, fc] : f.terms_) r.add_term(m, c * fc);
        return r;
    }
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
    MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

    /// f -= c * m * g, the inner step of polynomial reduction.
    void sub_mul(const Elem& c, const Monomial& m, const MPoly& g) {
        for (const auto& [mg, cg] : g.terms_) add_term(m * mg, -(c * cg));
    }

    MPoly pow(unsigned e) const {
        MPoly base = *this;
        MPoly r = constant(ring_, vars_, ring_.one());
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        a.check_compatible(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    long long degree() const {
        if (is_zero()) throw std::domain_error("MPoly: degree of zero");
        long long d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    long long weighted_degree(const WeightVector& w) const {
        if (is_zero()) throw std::domain_error("MPoly: weighted degree of zero");
        long long d = w.degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_) d = std::max(d, w.degree(m));
        return d;
    }

    bool is_homogeneous(const WeightVector& w) const {
        if (is_zero()) return true;
        const long long d = w.degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_) {
            if (w.degree(m) != d) return false;
        }
        return true;
    }

    MPoly partial_derivative(std::size_t i) const {
        MPoly r(ring_, vars_);
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial d = m;
            d.set(i, static_cast<std::uint16_t>(m[i] - 1));
            r.add_term(d, c * ring_.from_int(m[i]));
        }
        return r;
    }

    Elem evaluate(const std::vector<Elem>& point) const {
        if (point.size() != nvars()) throw std::invalid_argument("MPoly::evaluate: bad point size");
        Elem acc = ring_.zero();
        for (const auto& [m, c] : terms_) {
            Elem t = c;
            for (std::size_t i = 0; i < nvars(); ++i) {
                for (std::uint16_t e = 0; e < m[i]; ++e) t *= point[i];
            }
            acc += t;
        }
        return acc;
    }

    /// Ring-homomorphic substitution; the map must cover every variable
    /// appearing in the polynomial. Images define the result's ambient
    /// ring, which allows renaming into a different variable set.
    MPoly substitute(const std::map<std::size_t, MPoly>& images) const {
        if (terms_.empty() && images.empty()) return *this;
        const MPoly* any = images.empty() ? nullptr : &images.begin()->second;
        Ring out_ring = any ? any->ring_ : ring_;
        VarNames out_vars = any ? any->vars_ : vars_;
        std::map<std::size_t, std::vector<MPoly>> powers;  // powers[i][e] = image^e
        for (const auto& [i, img] : images) {
            if (!same_vars(img.vars_, out_vars) || !(img.ring_ == out_ring)) {
                throw std::invalid_argument("MPoly::substitute: images in mixed rings");
            }
            powers[i] = {MPoly::constant(out_ring, out_vars, out_ring.one())};
        }
        MPoly r(out_ring, out_vars);
        for (const auto& [m, c] : terms_) {
            MPoly t = MPoly::constant(out_ring, out_vars, static_cast<Elem>(c));
            for (std::size_t i = 0; i < nvars(); ++i) {
                if (m[i] == 0) continue;
                auto it = images.find(i);
                if (it == images.end()) {
                    throw std::invalid_argument("MPoly::substitute: no image for variable " +
                                                (*vars_)[i]);
                }
                auto& pw = powers[i];
                while (pw.size() <= m[i]) pw.push_back(pw.back() * it->second);
                t *= pw[m[i]];
            }
            r += t;
        }
        return r;
    }

    MPoly extended_to(const VarNames& big) const {
        const std::size_t extra = big->size() - nvars();
        MPoly r(ring_, big);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m.extended(extra), c);
        return r;
    }

    /// Drop the last variable; every term must have exponent 0 there.
    MPoly restricted_from_last() const {
        MPoly r(ring_, restricted_vars(vars_));
        for (const auto& [m, c] : terms_) {
            if (m[nvars() - 1] != 0) {
                throw std::logic_error("MPoly: cannot restrict, last variable occurs");
            }
            r.terms_.emplace(m.restricted(), c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Elem mag = c;
            bool neg = is_negative(c);
            if (neg) mag = -c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string mon = monomial_str(m);
            std::string coeff = ring_.str(mag);
            if (mon.empty()) {
                os << coeff;
            } else if (coeff == "1") {
                os << mon;
            } else {
                os << coeff << "*" << mon;
            }
        }
        return os.str();
    }

    void check_compatible(const MPoly& b) const {
        if (!(ring_ == b.ring_) || !same_vars(vars_, b.vars_)) {
            throw std::invalid_argument("MPoly: mixed-ring arithmetic");
        }
    }

private:
    std::string monomial_str(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << (*vars_)[i];
            if (m[i] > 1) os << "^" << m[i];
        }
        return os.str();
    }

    Ring ring_;
    VarNames vars_;
    TermMap terms_;
};

/// Quotient f / g when g divides f exactly, nullopt otherwise.
template <class Ring>
std::optional<MPoly<Ring>> exact_quotient(const MPoly<Ring>& f, const MPoly<Ring>& g) {
    f.check_compatible(g);
    if (g.is_zero()) throw std::domain_error("exact_quotient: division by zero");
    MPoly<Ring> q(f.ring(), f.vars());
    MPoly<Ring> r = f;
    const auto& glt = *g.terms().begin();
    const auto glc_inv = f.ring().inv(glt.second);
    while (!r.is_zero()) {
        const auto& rlt = *r.terms().begin();
        if (!glt.first.divides(rlt.first)) return std::nullopt;
        const Monomial m = glt.first.divide_into(rlt.first);
        const auto c = rlt.second * glc_inv;
        q.add_term(m, c);
        r.sub_mul(c, m, g);
    }
    return q;
}

/// Does g divide f? Quotient returned through *quotient when non-null.
template <class Ring>
bool divides(const MPoly<Ring>& g, const MPoly<Ring>& f, MPoly<Ring>* quotient = nullptr) {
    auto q = exact_quotient(f, g);
    if (q && quotient) *quotient = *q;
    return q.has_value();
}

inline MPoly<FpRing> reduce_mod_p(const MPoly<RationalRing>& f, const FpRing& ring) {
    MPoly<FpRing> r(ring, f.vars());
    for (const auto& [m, c] : f.terms()) r.add_term(m, ring.from_rational(c));
    return r;
}

/// Coefficient-wise lift along the section F_p -> {0, ..., p-1} of Z -> F_p.
inline MPoly<RationalRing> lift_to_rational(const MPoly<FpRing>& f) {
    RationalRing Q;
    MPoly<RationalRing> r(Q, f.vars());
    for (const auto& [m, c] : f.terms()) {
        r.add_term(m, BigRational(static_cast<long long>(c.value())));
    }
    return r;
}

/// The three 2x2 minors u_i w_j - u_j w_i, (i,j) in {(1,2), (1,3), (2,3)}.
template <class Ring>
std::array<MPoly<Ring>, 3> minors_2x2(const std::array<MPoly<Ring>, 3>& u,
                                      const std::array<MPoly<Ring>, 3>& w) {
    return {u[0] * w[1] - u[1] * w[0], u[0] * w[2] - u[2] * w[0], u[1] * w[2] - u[2] * w[1]};
}

}  // namespace rvf
