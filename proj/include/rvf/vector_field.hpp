#pragma once

#include <array>
#include <cstdint>
#include <type_traits>

#include "rvf/groebner.hpp"
#include "rvf/isobaric.hpp"
#include "rvf/matrix.hpp"
#include "rvf/mpoly.hpp"
#include "rvf/normalization.hpp"
#include "rvf/qseries.hpp"

namespace rvf {

/// Polynomial vector field v = sum_i (v t_i) d/dt_i on affine 3-space.
template <class Ring>
struct VectorField {
    Ring ring;
    VarNames vars;
    std::array<MPoly<Ring>, 3> components;  // (v t_1, v t_2, v t_3)
    Normalization norm;
};

namespace detail {

template <class Ring>
MPoly<Ring> t_term(const Ring& ring, const VarNames& vars, const BigRational& c, int e1, int e2,
                   int e3) {
    Monomial m(3);
    m.set(0, static_cast<std::uint16_t>(e1));
    m.set(1, static_cast<std::uint16_t>(e2));
    m.set(2, static_cast<std::uint16_t>(e3));
    MPoly<Ring> f(ring, vars);
    f.add_term(m, ring.from_rational(c));
    return f;
}

}  // namespace detail

/// The Ramanujan vector field. Scaled components solve for the scaled
/// Eisenstein triple; classical components (all coefficients divided by
/// the weights) solve for (E_2, E_4, E_6).
template <class Ring>
VectorField<Ring> make_ramanujan(Normalization norm, const Ring& ring) {
    const VarNames vars = t_vars();
    auto term = [&](const BigRational& c, int e1, int e2, int e3) {
        return detail::t_term(ring, vars, c, e1, e2, e3);
    };
    VectorField<Ring> vf{ring, vars, {MPoly<Ring>(ring, vars), MPoly<Ring>(ring, vars), MPoly<Ring>(ring, vars)}, norm};
    if (norm == Normalization::Scaled) {
        vf.components[0] = term(1, 2, 0, 0) + term(BigRational(-1, 12), 0, 1, 0);
        vf.components[1] = term(4, 1, 1, 0) + term(-6, 0, 0, 1);
        vf.components[2] = term(6, 1, 0, 1) + term(BigRational(-1, 3), 0, 2, 0);
    } else {
        vf.components[0] = term(BigRational(1, 12), 2, 0, 0) + term(BigRational(-1, 12), 0, 1, 0);
        vf.components[1] = term(BigRational(1, 3), 1, 1, 0) + term(BigRational(-1, 3), 0, 0, 1);
        vf.components[2] = term(BigRational(1, 2), 1, 0, 1) + term(BigRational(-1, 2), 0, 2, 0);
    }
    return vf;
}

/// The discriminant attached to the normalization: 27 t_3^2 - t_2^3
/// (scaled) or t_2^3 - t_3^2 (classical).
template <class Ring>
MPoly<Ring> discriminant(Normalization norm, const Ring& ring) {
    const VarNames vars = t_vars();
    if (norm == Normalization::Scaled) {
        return detail::t_term(ring, vars, 27, 0, 0, 2) + detail::t_term(ring, vars, -1, 0, 3, 0);
    }
    return detail::t_term(ring, vars, 1, 0, 3, 0) + detail::t_term(ring, vars, -1, 0, 0, 2);
}

/// Derivation action v(f) = sum_i (v t_i) df/dt_i.
template <class Ring>
MPoly<Ring> apply(const VectorField<Ring>& vf, const MPoly<Ring>& f) {
    MPoly<Ring> r(vf.ring, vf.vars);
    for (std::size_t i = 0; i < 3; ++i) r += vf.components[i] * f.partial_derivative(i);
    return r;
}

/// v applied p times (the p-th iterate as a derivation is applied
/// coordinatewise, one application at a time).
template <class Ring>
MPoly<Ring> iterate_p(const VectorField<Ring>& vf, const MPoly<Ring>& f, std::uint64_t p) {
    static_assert(std::is_same_v<Ring, FpRing>, "iterate_p works over F_p");
    if (vf.ring.p != p) throw std::invalid_argument("iterate_p: field characteristic differs from p");
    MPoly<Ring> r = f;
    for (std::uint64_t i = 0; i < p; ++i) r = apply(vf, r);
    return r;
}

/// Jacobian matrix of the components at a point.
template <class Ring>
Matrix<Ring> linear_part_at(const VectorField<Ring>& vf,
                            const std::vector<typename Ring::Elem>& point) {
    Matrix<Ring> m(vf.ring, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            m.at(i, j) = vf.components[i].partial_derivative(j).evaluate(point);
        }
    }
    return m;
}

/// The singular-locus ideal <t_1^2 - t_2, t_1^3 - t_3> of the classical
/// field; construction checks that every component v t_i lies in it.
template <class Ring>
Ideal<Ring> sing_v_ideal(const Ring& ring) {
    const VarNames vars = t_vars();
    const auto g1 = detail::t_term(ring, vars, 1, 2, 0, 0) + detail::t_term(ring, vars, -1, 0, 1, 0);
    const auto g2 = detail::t_term(ring, vars, 1, 3, 0, 0) + detail::t_term(ring, vars, -1, 0, 0, 1);
    Ideal<Ring> I(ring, vars, {g1, g2});
    const auto vf = make_ramanujan(Normalization::Classical, ring);
    const auto gb = groebner(I);
    for (const auto& c : vf.components) {
        if (!ideal_membership(c, gb)) {
            throw std::logic_error("sing_v_ideal: vector field component escapes Sing(v)");
        }
    }
    return I;
}

/// The base point a = (-1/12, 1/12, -1/216) and the tangent vector
/// b = (2, 20, 7/3) of the scaled solution, in any coefficient ring.
template <class Ring>
std::vector<typename Ring::Elem> point_a(const Ring& ring) {
    return {ring.from_rational(BigRational(-1, 12)), ring.from_rational(BigRational(1, 12)),
            ring.from_rational(BigRational(-1, 216))};
}

template <class Ring>
std::vector<typename Ring::Elem> vector_b(const Ring& ring) {
    return {ring.from_rational(2), ring.from_rational(20), ring.from_rational(BigRational(7, 3))};
}

/// Commutativity of the evaluation diagram: applying v upstairs matches
/// -q d/dq downstairs, checked to truncation N. Scaled normalization.
inline bool check_commutation(const VectorField<RationalRing>& vf, const MPoly<RationalRing>& f,
                              std::size_t N) {
    if (vf.norm != Normalization::Scaled) {
        throw std::invalid_argument("check_commutation: scaled normalization required");
    }
    const auto lhs = eval_at_eisenstein(apply(vf, f), Normalization::Scaled, N);
    const auto rhs = -theta(eval_at_eisenstein(f, Normalization::Scaled, N));
    return lhs == rhs;
}

}  // namespace rvf
