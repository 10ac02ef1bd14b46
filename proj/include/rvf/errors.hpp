#pragma once

#include <stdexcept>
#include <string>

namespace rvf {

/// A rational coefficient could not be reduced mod p because p divides
/// its denominator.
struct DenominatorDivisibleByP : std::domain_error {
    explicit DenominatorDivisibleByP(const std::string& what)
        : std::domain_error(what) {}
};

/// The isobaric recursion terminated with a series that is not
/// identically zero: the input was not a modular form of the claimed
/// weight, or the truncation was too short.
struct NonzeroResidual : std::domain_error {
    explicit NonzeroResidual(const std::string& what)
        : std::domain_error(what) {}
};

/// Division by the discriminant series requires a series vanishing at q^0.
struct NotACuspForm : std::domain_error {
    explicit NotACuspForm(const std::string& what)
        : std::domain_error(what) {}
};

/// Neither sign of the first-integral candidate is annihilated by the
/// vector field.
struct FirstIntegralFails : std::domain_error {
    explicit FirstIntegralFails(const std::string& what)
        : std::domain_error(what) {}
};

/// An order of the power-series recursion produced contradictory
/// equations (sign-convention guard).
struct RecursionInconsistent : std::domain_error {
    explicit RecursionInconsistent(const std::string& what)
        : std::domain_error(what) {}
};

}  // namespace rvf
