#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>

#include "rvf/checks.hpp"
#include "rvf/primes.hpp"

namespace rvf {

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {"prop6",    "prop7",    "prop8",    "thm2",
                                                   "thm3",     "thm4",     "conj10-1", "conj10-2",
                                                   "conj10-3", "conj11",   "conj9",    "aux"};
    return names;
}

/// Default prime ceilings: Groebner-heavy checks are capped lower than
/// series and Cartier sweeps.
inline std::pair<std::uint64_t, std::uint64_t> default_prime_range(const std::string& check) {
    if (check == "conj10-2") return {5, 11};
    if (check == "prop7") return {5, 13};
    if (check == "conj10-1" || check == "conj10-3" || check == "aux" || check == "thm4") {
        return {5, 31};
    }
    if (check == "prop8") return {5, 100};
    return {5, 97};
}

inline VerificationReport run_single_check(const std::string& check, std::uint64_t p,
                                           const CheckOptions& opts) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    VerificationReport rep;
    try {
        if (check == "prop6") rep = verify_prop6(opts);
        else if (check == "prop7") rep = verify_prop7(p, opts);
        else if (check == "prop8") rep = verify_prop8(p, opts);
        else if (check == "thm2") rep = verify_thm2(p, opts);
        else if (check == "thm3") rep = verify_thm3(p, opts);
        else if (check == "thm4") rep = verify_thm4(p, opts);
        else if (check == "conj10-1") rep = verify_conj10_item1(p, opts);
        else if (check == "conj10-2") rep = verify_conj10_item2(p, opts);
        else if (check == "conj10-3") rep = verify_conj10_item3(p, opts);
        else if (check == "conj11") rep = verify_conj11(p, opts);
        else if (check == "conj9") rep = verify_conj9(p, opts);
        else if (check == "aux") rep = verify_aux_facts(p, opts);
        else if (check == "f2") rep = explore_f2(p, opts);
        else throw std::invalid_argument("unknown check: " + check);
    } catch (const std::exception& e) {
        rep.check = check;
        rep.prime = p;
        rep.status = Status::Fail;
        rep.details = {{"exception", e.what()}};
    }
    rep.ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rep;
}

/// One task per (check, prime); tasks run on up to `jobs` workers and the
/// report list is returned sorted by (check, prime) regardless of worker
/// count. prop6 is prime-independent and runs once.
inline std::vector<VerificationReport> run_checks(
    const std::vector<std::string>& checks,
    std::optional<std::pair<std::uint64_t, std::uint64_t>> prime_range, const CheckOptions& opts,
    unsigned jobs = 1) {
    struct Task {
        std::string check;
        std::uint64_t prime;
    };
    std::vector<Task> tasks;
    for (const auto& check : checks) {
        if (check == "prop6") {
            tasks.push_back({check, 0});
            continue;
        }
        const auto range = prime_range ? *prime_range : default_prime_range(check);
        for (auto p : primes_in(std::max<std::uint64_t>(range.first, 5), range.second)) {
            tasks.push_back({check, p});
        }
    }

    std::vector<VerificationReport> reports(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            reports[i] = run_single_check(tasks[i].check, tasks[i].prime, opts);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                reports[i] = run_single_check(tasks[i].check, tasks[i].prime, opts);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         return std::tie(a.check, a.prime) < std::tie(b.check, b.prime);
                     });
    return reports;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (r.status == Status::Fail) return false;
    }
    return true;
}

}  // namespace rvf
