#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "rvf/bernoulli.hpp"
#include "rvf/runner.hpp"

namespace {

using namespace rvf;

struct GlobalOptions {
    std::string output = "text";
    unsigned jobs = 1;
    bool json() const { return output == "json"; }
};

std::pair<std::uint64_t, std::uint64_t> parse_prime_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const std::uint64_t p = std::stoull(s);
        return {p, p};
    }
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
}

int cmd_bernoulli(unsigned max_k, const GlobalOptions& g) {
    for (unsigned k = 0; k <= max_k; ++k) {
        const BigRational b = bernoulli(k);
        std::optional<bool> vsc;
        if (k >= 2 && k % 2 == 0) vsc = check_von_staudt_clausen(k).is_integer;
        if (g.json()) {
            nlohmann::json j;
            j["k"] = k;
            j["bernoulli"] = b.str();
            if (vsc) j["von_staudt_clausen"] = *vsc;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "B_" << k << " = " << b.str();
            if (vsc) std::cout << (*vsc ? "   [von Staudt-Clausen ok]" : "   [von Staudt-Clausen FAILS]");
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_eisenstein(unsigned weight, std::size_t terms, std::uint64_t mod_p, const GlobalOptions& g) {
    const auto series = eisenstein(weight, terms);
    std::string rendered;
    nlohmann::json coeffs = nlohmann::json::array();
    if (mod_p != 0) {
        const FpRing F(mod_p);
        const auto reduced = reduce_mod_p(series, F);
        rendered = reduced.str();
        for (std::size_t n = 0; n < terms; ++n) coeffs.push_back(reduced.coeff(n).value());
    } else {
        rendered = series.str();
        for (std::size_t n = 0; n < terms; ++n) coeffs.push_back(series.coeff(n).str());
    }
    if (g.json()) {
        nlohmann::json j;
        j["weight"] = weight;
        j["terms"] = terms;
        if (mod_p != 0) j["mod_p"] = mod_p;
        j["series"] = rendered;
        j["coefficients"] = coeffs;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "E_" << weight << (mod_p ? " mod " + std::to_string(mod_p) : "") << " = "
                  << rendered << "\n";
    }
    return 0;
}

int cmd_isobaric(unsigned weight, const GlobalOptions& g) {
    const auto P = isobaric_representation(weight, eisenstein(weight, default_isobaric_truncation(weight)));
    const auto mult = minimal_integral_multiplier(weight);
    if (g.json()) {
        nlohmann::json j;
        j["weight"] = weight;
        j["polynomial"] = P.str();
        j["minimal_multiplier"] = mult.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "E_" << weight << " = P(E_4, E_6) with P(u, v) = " << P.str() << "\n";
        std::cout << "minimal integral multiplier: " << mult.str() << "\n";
    }
    return 0;
}

int cmd_ab(std::uint64_t p, const std::string& norm_name, const GlobalOptions& g) {
    const auto norm = norm_name == "scaled" ? Normalization::Scaled : Normalization::Classical;
    const auto ab = ab_polynomials(p, norm);
    if (g.json()) {
        nlohmann::json j;
        j["prime"] = p;
        j["normalization"] = norm_name;
        j["A"] = ab.A.str();
        j["B"] = ab.B.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "p = " << p << ", " << norm_name << " normalization\n";
        std::cout << "A = " << ab.A.str() << "\n";
        std::cout << "B = " << ab.B.str() << "\n";
    }
    return 0;
}

int emit_reports(const std::vector<VerificationReport>& reports, const GlobalOptions& g) {
    for (const auto& r : reports) {
        std::cout << (g.json() ? to_json_line(r) : to_text_line(r)) << "\n";
    }
    return all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for the Ramanujan vector field mod p"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", g.jobs, "Worker count for prime sweeps")->check(CLI::PositiveNumber);

    unsigned max_k = 30;
    auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers with Von Staudt-Clausen status");
    bern->add_option("--max-k", max_k, "Largest index")->required();

    unsigned weight = 4;
    std::size_t terms = 10;
    std::uint64_t mod_p = 0;
    auto* eis = app.add_subcommand("eisenstein", "q-expansion of an Eisenstein series");
    eis->add_option("--weight", weight, "Even weight >= 2")->required();
    eis->add_option("--terms", terms, "Truncation order");
    eis->add_option("--mod-p", mod_p, "Reduce mod a prime >= 5");

    unsigned iso_weight = 12;
    auto* iso = app.add_subcommand("isobaric", "Isobaric polynomial in E_4, E_6 and its minimal multiplier");
    iso->add_option("--weight", iso_weight, "Even weight >= 4")->required();

    std::uint64_t ab_prime = 5;
    std::string norm_name = "classical";
    auto* ab = app.add_subcommand("ab", "The polynomials A, B over F_p");
    ab->add_option("--prime", ab_prime, "Prime >= 5")->required();
    ab->add_option("--normalization", norm_name, "Coordinate normalization")
        ->check(CLI::IsMember({"scaled", "classical"}));

    std::string check_name;
    std::string primes_arg;
    CheckOptions opts;
    auto* verify = app.add_subcommand("verify", "Run a verification procedure over a prime range");
    verify->add_option("--check", check_name, "Which statement to verify")
        ->required()
        ->check(CLI::IsMember(known_checks()));
    verify->add_option("--primes", primes_arg, "Prime range A..B (default per check)");
    verify->add_option("--terms", opts.terms, "q-truncation for series checks");
    verify->add_option("--samples", opts.samples, "Sampled points per prime");
    verify->add_option("--seed", opts.seed, "Random seed");

    std::uint64_t f2_prime = 7;
    auto* explore = app.add_subcommand("explore", "Exploratory computations");
    explore->require_subcommand(1);
    auto* f2 = explore->add_subcommand("f2", "Zero locus of F_2 on the curve Zero(I_p)");
    f2->add_option("--prime", f2_prime, "Prime >= 5")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (bern->parsed()) return cmd_bernoulli(max_k, g);
        if (eis->parsed()) return cmd_eisenstein(weight, terms, mod_p, g);
        if (iso->parsed()) return cmd_isobaric(iso_weight, g);
        if (ab->parsed()) return cmd_ab(ab_prime, norm_name, g);
        if (verify->parsed()) {
            std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
            if (!primes_arg.empty()) range = parse_prime_range(primes_arg);
            if (verify->count("--terms")) opts.ode_terms = opts.terms;
            const auto reports = run_checks({check_name}, range, opts, g.jobs);
            return emit_reports(reports, g);
        }
        if (f2->parsed()) {
            const auto report = run_single_check("f2", f2_prime, opts);
            return emit_reports({report}, g);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
