#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace boomtab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter outside the supported range (e.g. n > 20).
struct RangeError : Error {
    using Error::Error;
};

// Operation undefined for the given input (inverse of 0, non-permutation, ...).
struct DomainError : Error {
    using Error::Error;
};

struct ArgumentError : Error {
    using Error::Error;
};

struct ReducibleModulusError : ArgumentError {
    ReducibleModulusError(const std::string& what, std::uint64_t f)
        : ArgumentError(what), factor(f) {}
    std::uint64_t factor;
};

// A closed form was asked for outside the hypotheses it was derived under.
struct HypothesisError : DomainError {
    using DomainError::DomainError;
};

// Requested full sweep is larger than the documented budget.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& what, double ops) : Error(what), estimated_ops(ops) {}
    double estimated_ops;
};

// Caller broke a documented contract (e.g. wrong map form for a table kind).
struct ContractError : Error {
    using Error::Error;
};

}  // namespace boomtab
