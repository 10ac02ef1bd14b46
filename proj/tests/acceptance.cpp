// Acceptance suite: one criterion per line, exact arithmetic throughout.
// Usage: rvf-acceptance [--criterion N]

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rvf/runner.hpp"

using namespace rvf;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_ms;
    std::function<bool(std::ostream&)> run;
};

bool sweep_passes(const std::string& check, std::uint64_t lo, std::uint64_t hi,
                  const CheckOptions& opts, std::ostream& log, unsigned jobs = 4) {
    const auto reports = run_checks({check}, std::make_pair(lo, hi), opts, jobs);
    bool ok = !reports.empty();
    for (const auto& r : reports) {
        if (r.status == Status::Fail) {
            ok = false;
            log << "    " << to_text_line(r) << "\n";
        }
    }
    return ok;
}

bool criterion_bernoulli(std::ostream& log) {
    bool ok = bernoulli(2) == BigRational(1, 6) && bernoulli(4) == BigRational(-1, 30) &&
              bernoulli(6) == BigRational(1, 42);
    for (unsigned k = 2; k <= 60; k += 2) ok = ok && check_von_staudt_clausen(k).is_integer;
    // 30 Kummer triples (k, k', p), k' = k + m(p-1), both prime to p-1
    int triples = 0;
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        for (unsigned k = 2; k + 2 * (p - 1) <= 60 && triples < 30; k += 2) {
            if (k % (p - 1) == 0) continue;
            for (unsigned m = 1; m <= 2 && triples < 30; ++m) {
                const unsigned k2 = k + m * static_cast<unsigned>(p - 1);
                if (k2 % (p - 1) == 0) continue;
                ++triples;
                if (!check_kummer(k, k2, p)) {
                    log << "    kummer fails at (" << k << ", " << k2 << ", " << p << ")\n";
                    ok = false;
                }
            }
        }
    }
    ok = ok && triples == 30;
    return ok;
}

bool criterion_ode(std::ostream& log) {
    const std::size_t N = 100;
    const auto sol = ode_solve(N);
    const auto scales = eisenstein_scales(Normalization::Scaled);
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
        const auto e = eisenstein(2 * (i + 1), N);
        for (std::size_t n = 0; n < N; ++n) {
            if (sol.coeff[i][n] != scales[i] * e.coeff(n)) {
                log << "    coefficient mismatch at i=" << i + 1 << " n=" << n << "\n";
                ok = false;
            }
        }
    }
    // n >= 1 coefficients are p-integral for every p >= 5: denominators are
    // products of 2 and 3 only (t_1, t_2 are integral, 3 t_3 is integral)
    for (int i = 0; i < 3; ++i) {
        for (std::size_t n = 1; n < N; ++n) {
            BigInt d = den(sol.coeff[i][n]);
            while (d % 2 == 0) d /= 2;
            while (d % 3 == 0) d /= 3;
            if (d != 1) {
                log << "    denominator with prime >= 5 at i=" << i + 1 << " n=" << n << "\n";
                ok = false;
            }
            if (i < 2 && den(sol.coeff[i][n]) != 1) {
                log << "    t_" << i + 1 << " coefficient not an integer at n=" << n << "\n";
                ok = false;
            }
            if (i == 2 && den(3 * sol.coeff[i][n]) != 1) {
                log << "    3 t_3 coefficient not an integer at n=" << n << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion_remark1(std::ostream& log) {
    const RationalRing Q;
    const auto vf = make_ramanujan(Normalization::Classical, Q);
    const std::vector<BigRational> one3 = {1, 1, 1};
    const auto A = linear_part_at(vf, one3);
    const BigRational expected[3][3] = {{BigRational(1, 6), BigRational(-1, 12), 0},
                                        {BigRational(1, 3), BigRational(1, 3), BigRational(-1, 3)},
                                        {BigRational(1, 2), -1, BigRational(1, 2)}};
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) ok = ok && A.at(i, j) == expected[i][j];
    }
    if (!ok) log << "    linear part differs from the reference matrix\n";

    // Jordan data: A = S J S^{-1}
    Matrix<RationalRing> S(Q, 3, 3), J(Q, 3, 3);
    const BigRational svals[3][3] = {{BigRational(1, 3), 2, BigRational(1, 21)},
                                     {BigRational(2, 3), 0, BigRational(-10, 21)},
                                     {1, 0, 1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) S.at(i, j) = svals[i][j];
    }
    J.at(0, 1) = 1;
    J.at(2, 2) = 1;
    const auto Sinv = S.inverse();
    if (!Sinv || !(S * J * *Sinv == A)) {
        log << "    S J S^{-1} does not reproduce the linear part\n";
        ok = false;
    }

    // rank(A^p - A) = 1 over F_p
    for (std::uint64_t p : {5ull, 7ull, 11ull}) {
        const FpRing F(p);
        Matrix<FpRing> Ap(F, 3, 3);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) Ap.at(i, j) = F.from_rational(A.at(i, j));
        }
        const auto diff = Ap.pow(p) - Ap;
        if (diff.rank() != 1) {
            log << "    rank(A^p - A) != 1 at p = " << p << "\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion_diagram(std::ostream& log) {
    const RationalRing Q;
    const auto vf = make_ramanujan(Normalization::Scaled, Q);
    const auto tv = t_vars();
    const auto t1 = MPoly<RationalRing>::variable(Q, tv, 0);
    const auto t2 = MPoly<RationalRing>::variable(Q, tv, 1);
    const auto t3 = MPoly<RationalRing>::variable(Q, tv, 2);
    std::vector<MPoly<RationalRing>> cases = {t1, t2, t3, t1 * t2, t2 * t3};
    // a fixed "random" cubic
    MPoly<RationalRing> cubic(Q, tv);
    Monomial m1(3), m2(3), m3(3);
    m1.set(0, 3);
    m2.set(0, 1);
    m2.set(1, 1);
    m3.set(2, 1);
    cubic.add_term(m1, BigRational(2));
    cubic.add_term(m2, BigRational(-5, 7));
    cubic.add_term(m3, BigRational(3));
    cases.push_back(cubic);

    bool ok = true;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (!check_commutation(vf, cases[i], 30)) {
            log << "    commutation fails for case " << i << "\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion_conj11(std::ostream& log) {
    CheckOptions opts;
    bool ok = sweep_passes("conj11", 5, 97, opts, log);
    const FpRing F(7);
    const auto tv = t_vars();
    VectorField<FpRing> ctrl{F, tv,
                             {MPoly<FpRing>::variable(F, tv, 0), MPoly<FpRing>(F, tv),
                              MPoly<FpRing>(F, tv)},
                             Normalization::Classical};
    if (!is_p_closed(ctrl, 7)) {
        log << "    p-closed control field not flagged\n";
        ok = false;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) only = std::stoi(argv[++i]);
    }

    CheckOptions opts;
    std::vector<Criterion> criteria = {
        {1, "Bernoulli values, Von Staudt-Clausen <= 60, 30 Kummer triples", 1000,
         criterion_bernoulli},
        {2, "minimal-multiplier table 2k = 2..24", 5000,
         [&](std::ostream&) { return verify_prop6(opts).status == Status::Pass; }},
        {3, "E_{p-1} = 1 and E_{p+1} = E_2 mod p to order 40, p <= 97", 30000,
         [&](std::ostream& log) {
             bool ok = true;
             for (auto p : primes_in(5, 97)) {
                 const FpRing F(p);
                 const auto epm1 = reduce_mod_p(eisenstein(static_cast<unsigned>(p) - 1, 40), F);
                 QSeries<FpRing> one(F, 40);
                 one.set_coeff(0, F.one());
                 const auto epp1 = reduce_mod_p(eisenstein(static_cast<unsigned>(p) + 1, 40), F);
                 const auto e2 = reduce_mod_p(eisenstein(2, 40), F);
                 if (!(epm1 == one && epp1 == e2)) {
                     log << "    congruence fails at p = " << p << "\n";
                     ok = false;
                 }
             }
             return ok;
         }},
        {4, "Cartier coefficients match A and B/12 symbolically, p <= 100", 120000,
         [&](std::ostream& log) { return sweep_passes("prop8", 5, 100, opts, log); }},
        {5, "Zero(I_p) points satisfy C(alpha) = alpha, C(omega) = 0, p <= 97", 60000,
         [&](std::ostream& log) { return sweep_passes("thm2", 5, 97, opts, log); }},
        {6, "power-series solution matches the divisor-sum oracle to order 100", 5000,
         criterion_ode},
        {7, "first integral: v(f) = 0, degree p+1, curve identity, p <= 31", 120000,
         [&](std::ostream& log) { return sweep_passes("thm4", 5, 31, opts, log); }},
        {8, "invariance, v^p - v derivation, tangency at a, p in {5,7,11,13}", 120000,
         [&](std::ostream& log) { return sweep_passes("prop7", 5, 13, opts, log); }},
        {9, "three-component certificates, p <= 11 (item 2) and p <= 31 (items 1, 3)", 600000,
         [&](std::ostream& log) {
             return sweep_passes("conj10-1", 5, 31, opts, log) &&
                    sweep_passes("conj10-2", 5, 11, opts, log) &&
                    sweep_passes("conj10-3", 5, 31, opts, log);
         }},
        {10, "no p-closed prime in 5..97; control field flagged", 300000, criterion_conj11},
        {11, "linear part at (1,1,1), Jordan decomposition, rank-one property", 1000,
         criterion_remark1},
        {12, "evaluation diagram commutes to order 30", 5000, criterion_diagram},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::ostringstream log;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = ms < c.budget_ms;
        const bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::cout << "criterion " << std::setw(2) << c.id << " [" << (pass ? "pass" : "FAIL")
                  << "] " << c.name << " (" << std::fixed << std::setprecision(1) << ms
                  << " ms, budget " << c.budget_ms << " ms)\n";
        if (!ok) std::cout << log.str();
        if (ok && !in_budget) std::cout << "    over budget\n";
    }
    return failures == 0 ? 0 : 1;
}
