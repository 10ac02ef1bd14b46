#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rvf/errors.hpp"
#include "rvf/matrix.hpp"
#include "rvf/valuation.hpp"
#include "rvf/vector_field.hpp"

namespace rvf {

/// Coefficients of the formal power-series solution t_i = sum t_{i,n} q^n
/// of the scaled field, with t(0) = a and q-coefficients b.
struct ODESolution {
    std::array<std::vector<BigRational>, 3> coeff;
    std::size_t truncation() const { return coeff[0].size(); }
};

/// Order-by-order solution of the system t-dot = v(t) with
/// t-dot = -q dt/dq. At every order n >= 2 the linear system (J + nI) x =
/// -K(n) has a unique solution (J is the linear part at a); order 1 is
/// the prescribed tangent vector b, whose consistency is verified.
inline ODESolution ode_solve(std::size_t N) {
    if (N < 2) throw std::invalid_argument("ode_solve: need N >= 2");
    const RationalRing Q;
    const auto vf = make_ramanujan(Normalization::Scaled, Q);
    const auto a = point_a(Q);
    const auto b = vector_b(Q);
    const Matrix<RationalRing> J = linear_part_at(vf, a);

    ODESolution sol;
    for (int i = 0; i < 3; ++i) {
        sol.coeff[i].assign(N, BigRational(0));
        sol.coeff[i][0] = a[i];
    }

    // Coefficient n of v_i(t) with the order-n unknowns treated as 0: only
    // interior convolution terms of the quadratic monomials contribute.
    auto known_part = [&](std::size_t i, std::size_t n) {
        BigRational acc = 0;
        for (const auto& [m, c] : vf.components[i].terms()) {
            if (m.degree() > 2) throw std::logic_error("ode_solve: field is not quadratic");
            std::array<int, 2> factors{-1, -1};
            int k = 0;
            for (int j = 0; j < 3; ++j) {
                for (int e = 0; e < m[j]; ++e) factors[k++] = j;
            }
            if (k < 2) continue;  // linear terms carry the unknowns, constants are order 0
            BigRational conv = 0;
            for (std::size_t s = 1; s < n; ++s) {
                conv += sol.coeff[factors[0]][s] * sol.coeff[factors[1]][n - s];
            }
            acc += c * conv;
        }
        return acc;
    };

    for (std::size_t n = 1; n < N; ++n) {
        std::array<BigRational, 3> k{known_part(0, n), known_part(1, n), known_part(2, n)};
        std::array<BigRational, 3> x;
        if (n == 1) {
            x = {b[0], b[1], b[2]};
        } else {
            Matrix<RationalRing> aug(Q, 3, 4);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) aug.at(i, j) = J.at(i, j);
                aug.at(i, i) += BigRational(static_cast<long long>(n));
                aug.at(i, 3) = -k[i];
            }
            const auto pivots = aug.rref();
            if (pivots.size() != 3 || pivots[0] != 0 || pivots[1] != 1 || pivots[2] != 2) {
                throw RecursionInconsistent("ode_solve: singular system at order " +
                                            std::to_string(n));
            }
            for (int i = 0; i < 3; ++i) x[i] = aug.at(i, 3);
        }
        // Over-determination guard: every equation must hold exactly.
        for (int i = 0; i < 3; ++i) {
            BigRational lhs = -BigRational(static_cast<long long>(n)) * x[i];
            BigRational rhs = k[i];
            for (int j = 0; j < 3; ++j) rhs += J.at(i, j) * x[j];
            if (lhs != rhs) {
                throw RecursionInconsistent("ode_solve: inconsistent equations at order " +
                                            std::to_string(n));
            }
        }
        for (int i = 0; i < 3; ++i) sol.coeff[i][n] = x[i];
    }
    return sol;
}

struct PIntegralityEntry {
    std::uint64_t prime = 0;
    PValuation min_ord = PValuation::infinity();           // over all i, n
    PValuation min_ord_positive_n = PValuation::infinity();  // over n >= 1
};

/// Minimal p-adic valuation of the solution coefficients per prime; the
/// n >= 1 minimum isolates the constant terms' fixed denominators.
inline std::vector<PIntegralityEntry> p_integrality_report(const ODESolution& sol,
                                                           const std::vector<std::uint64_t>& primes) {
    std::vector<PIntegralityEntry> out;
    for (auto p : primes) {
        PIntegralityEntry e;
        e.prime = p;
        for (int i = 0; i < 3; ++i) {
            for (std::size_t n = 0; n < sol.coeff[i].size(); ++n) {
                const auto v = ord_p(sol.coeff[i][n], p);
                if (v < e.min_ord) e.min_ord = v;
                if (n >= 1 && v < e.min_ord_positive_n) e.min_ord_positive_n = v;
            }
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace rvf
