#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "rvf/mpoly.hpp"

namespace rvf {

template <class Ring>
struct Ideal {
    Ring ring;
    VarNames vars;
    std::vector<MPoly<Ring>> gens;

    Ideal(Ring r, VarNames v, std::vector<MPoly<Ring>> g)
        : ring(std::move(r)), vars(std::move(v)), gens(std::move(g)) {
        for (const auto& f : gens) {
            if (!(f.ring() == ring) || !same_vars(f.vars(), vars)) {
                throw std::invalid_argument("Ideal: generators in mixed rings");
            }
        }
    }
};

namespace detail {

template <class Ring>
std::pair<Monomial, typename Ring::Elem> leading_term(const MPoly<Ring>& f,
                                                      const MonomialOrder& order) {
    if (f.is_zero()) throw std::domain_error("leading_term of zero");
    if (order.aux == 0) return *f.terms().begin();  // map is grevlex-descending
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it) {
        if (order.less(best->first, it->first)) best = it;
    }
    return *best;
}

template <class Ring>
MPoly<Ring> monic(const MPoly<Ring>& f, const MonomialOrder& order) {
    const auto [m, c] = leading_term(f, order);
    return f.ring().inv(c) * f;
}

}  // namespace detail

/// Remainder of f on full division by the basis: no term of the result is
/// divisible by any leading monomial of the basis.
template <class Ring>
MPoly<Ring> normal_form(const MPoly<Ring>& f, const std::vector<MPoly<Ring>>& basis,
                        const MonomialOrder& order = MonomialOrder::grevlex()) {
    std::vector<const MPoly<Ring>*> divisors;
    std::vector<std::pair<Monomial, typename Ring::Elem>> lts;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        divisors.push_back(&g);
        lts.push_back(detail::leading_term(g, order));
    }

    MPoly<Ring> tail(f.ring(), f.vars());
    MPoly<Ring> h = f;
    while (!h.is_zero()) {
        const auto [m, c] = detail::leading_term(h, order);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (lts[i].first.divides(m)) {
                h.sub_mul(c * f.ring().inv(lts[i].second), lts[i].first.divide_into(m), *divisors[i]);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            tail.add_term(m, c);
            h.add_term(m, -c);
        }
    }
    return tail;
}

/// Reduced Groebner basis by Buchberger's algorithm with the coprimality
/// and chain criteria. Deterministic for a fixed order; basis elements are
/// monic and sorted by ascending leading monomial.
template <class Ring>
std::vector<MPoly<Ring>> groebner(const Ideal<Ring>& I,
                                  const MonomialOrder& order = MonomialOrder::grevlex()) {
    using Poly = MPoly<Ring>;
    const Ring& R = I.ring;

    std::vector<Poly> G;
    std::vector<Monomial> lm;
    auto one_basis = [&] {
        return std::vector<Poly>{Poly::constant(R, I.vars, R.one())};
    };

    for (const auto& g : I.gens) {
        if (g.is_zero()) continue;
        if (g.is_constant()) return one_basis();
        G.push_back(detail::monic(g, order));
        lm.push_back(detail::leading_term(g, order).first);
    }

    // Pending s-pairs keyed for the normal selection strategy.
    struct PairKey {
        long long deg;
        Monomial l;
        std::size_t i, j;
    };
    struct PairLess {
        MonomialOrder order;
        bool operator()(const PairKey& a, const PairKey& b) const {
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.l != b.l) return order.less(a.l, b.l);
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        }
    };
    std::set<PairKey, PairLess> pending{PairLess{order}};
    std::set<std::pair<std::size_t, std::size_t>> pending_idx;

    auto push_pair = [&](std::size_t i, std::size_t j) {
        const Monomial l = lcm(lm[i], lm[j]);
        pending.insert(PairKey{l.degree(), l, i, j});
        pending_idx.insert({i, j});
    };
    for (std::size_t j = 1; j < G.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
    }

    while (!pending.empty()) {
        const PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        pending_idx.erase({pk.i, pk.j});

        // Buchberger's first criterion: coprime leading monomials.
        if (pk.l == lm[pk.i] * lm[pk.j]) continue;
        // Chain criterion.
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j || !lm[k].divides(pk.l)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending_idx.count(key(pk.i, k)) && !pending_idx.count(key(pk.j, k))) skip = true;
        }
        if (skip) continue;

        Poly s = Poly(R, I.vars);
        s.sub_mul(-R.one(), lm[pk.i].divide_into(pk.l), G[pk.i]);
        s.sub_mul(R.one(), lm[pk.j].divide_into(pk.l), G[pk.j]);
        Poly r = normal_form(s, G, order);
        if (r.is_zero()) continue;
        if (r.is_constant()) return one_basis();
        G.push_back(detail::monic(r, order));
        lm.push_back(detail::leading_term(r, order).first);
        for (std::size_t i = 0; i + 1 < G.size(); ++i) push_pair(i, G.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return order.less(lm[a], lm[b]); });
    std::vector<Poly> minimal;
    std::vector<Monomial> minimal_lm;
    for (std::size_t i : idx) {
        bool divided = false;
        for (const auto& m : minimal_lm) {
            if (m.divides(lm[i])) {
                divided = true;
                break;
            }
        }
        if (!divided) {
            minimal.push_back(G[i]);
            minimal_lm.push_back(lm[i]);
        }
    }
    // Inter-reduce tails.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        reduced.push_back(others.empty() ? minimal[i]
                                         : detail::monic(normal_form(minimal[i], others, order), order));
    }
    return reduced;
}

template <class Ring>
bool ideal_membership(const MPoly<Ring>& f, const Ideal<Ring>& I,
                      const MonomialOrder& order = MonomialOrder::grevlex()) {
    if (f.is_zero()) return true;
    return normal_form(f, groebner(I, order), order).is_zero();
}

template <class Ring>
bool ideal_membership(const MPoly<Ring>& f, const std::vector<MPoly<Ring>>& gb,
                      const MonomialOrder& order = MonomialOrder::grevlex()) {
    if (f.is_zero()) return true;
    return normal_form(f, gb, order).is_zero();
}

namespace detail {

inline std::string aux_var_name(const VarNames& vars) {
    std::string name = "y";
    while (std::find(vars->begin(), vars->end(), name) != vars->end()) name += "'";
    return name;
}

}  // namespace detail

/// I cap J via the elimination construction y*I + (1-y)*J.
template <class Ring>
Ideal<Ring> ideal_intersection(const Ideal<Ring>& I, const Ideal<Ring>& J) {
    if (!same_vars(I.vars, J.vars) || !(I.ring == J.ring)) {
        throw std::invalid_argument("ideal_intersection: mixed rings");
    }
    const VarNames big = extended_vars(I.vars, detail::aux_var_name(I.vars));
    const std::size_t yi = big->size() - 1;
    const MPoly<Ring> y = MPoly<Ring>::variable(I.ring, big, yi);
    const MPoly<Ring> one = MPoly<Ring>::constant(I.ring, big, I.ring.one());

    std::vector<MPoly<Ring>> gens;
    for (const auto& g : I.gens) gens.push_back(y * g.extended_to(big));
    for (const auto& h : J.gens) gens.push_back((one - y) * h.extended_to(big));

    const auto gb = groebner(Ideal<Ring>(I.ring, big, gens), MonomialOrder::eliminate_last(1));
    std::vector<MPoly<Ring>> result;
    for (const auto& g : gb) {
        bool has_y = false;
        for (const auto& [m, c] : g.terms()) {
            if (m[yi] != 0) {
                has_y = true;
                break;
            }
        }
        if (!has_y) result.push_back(g.restricted_from_last());
    }
    return Ideal<Ring>(I.ring, I.vars, result);
}

template <class Ring>
Ideal<Ring> ideal_intersection(const Ideal<Ring>& I, const Ideal<Ring>& J, const Ideal<Ring>& K) {
    return ideal_intersection(ideal_intersection(I, J), K);
}

/// f in sqrt(I) iff 1 in I + <1 - y f> one variable up (Rabinowitsch).
template <class Ring>
bool radical_membership(const MPoly<Ring>& f, const Ideal<Ring>& I) {
    if (f.is_zero()) return true;
    const VarNames big = extended_vars(I.vars, detail::aux_var_name(I.vars));
    const MPoly<Ring> y = MPoly<Ring>::variable(I.ring, big, big->size() - 1);
    const MPoly<Ring> one = MPoly<Ring>::constant(I.ring, big, I.ring.one());

    std::vector<MPoly<Ring>> gens;
    for (const auto& g : I.gens) gens.push_back(g.extended_to(big));
    gens.push_back(one - y * f.extended_to(big));

    const auto gb = groebner(Ideal<Ring>(I.ring, big, gens), MonomialOrder::grevlex());
    return gb.size() == 1 && gb.front().is_constant();
}

}  // namespace rvf
