#pragma once

#include <stdexcept>
#include <string>

namespace grunsky {

/// Division by a series whose constant term vanishes.
struct ZeroConstantTerm : std::domain_error {
    ZeroConstantTerm() : std::domain_error("series division requires a nonzero constant term") {}
};

/// log/sqrt of a series whose constant term is not exactly 1.
struct ConstantTermNotOne : std::domain_error {
    explicit ConstantTermNotOne(const std::string& op)
        : std::domain_error(op + " requires constant term 1") {}
};

/// Input series is not of the form z + c2 z^2 + ...
struct NotNormalized : std::domain_error {
    NotNormalized() : std::domain_error("series must be normalized: coeff[0] = 0, coeff[1] = 1") {}
};

/// Requested bivariate total-degree cap exceeds what the input order supports.
struct CapTooLarge : std::invalid_argument {
    CapTooLarge(int cap, int max_cap)
        : std::invalid_argument("cap " + std::to_string(cap) + " exceeds maximum " +
                                std::to_string(max_cap) + " for this series order") {}
};

/// Table or coefficient lookup outside the stored range.
struct MissingEntry : std::out_of_range {
    explicit MissingEntry(const std::string& what) : std::out_of_range(what) {}
};

/// Series order too small for the requested computation.
struct OrderTooSmall : std::invalid_argument {
    OrderTooSmall(int order, int required)
        : std::invalid_argument("series order " + std::to_string(order) + " too small, need >= " +
                                std::to_string(required)) {}
};

/// Square root of a value below the roundoff clamp window.
struct SqrtDomainError : std::domain_error {
    explicit SqrtDomainError(double arg)
        : std::domain_error("sqrt argument " + std::to_string(arg) + " below clamp window") {}
};

/// Branch-and-bound exhausted its box budget before reaching the requested width.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(unsigned long long cap, double gap)
        : std::runtime_error("box budget " + std::to_string(cap) +
                             " exhausted, remaining gap " + std::to_string(gap)) {}
};

}  // namespace grunsky
