// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace framequant {

// Matrix expected to be positive semidefinite was not.
struct NotPositive : std::runtime_error {
    explicit NotPositive(const std::string& what) : std::runtime_error(what) {}
};

// Vector family fails the two-sided stability condition.
struct NotAFrame : std::runtime_error {
    explicit NotAFrame(const std::string& what) : std::runtime_error(what) {}
};

// Analyzing operator of an operator frame is unusable (e.g. not normalized).
struct InvalidFrame : std::runtime_error {
    explicit InvalidFrame(const std::string& what) : std::runtime_error(what) {}
};

// Operation requires a Hermitian operator.
struct NotSelfAdjoint : std::runtime_error {
    explicit NotSelfAdjoint(const std::string& what) : std::runtime_error(what) {}
};

// Trace-class input with the wrong normalization (tr != 1).
struct InvalidNormalization : std::runtime_error {
    explicit InvalidNormalization(const std::string& what) : std::runtime_error(what) {}
};

// Analyzing operator with (numerically) vanishing trace where tr != 0 is required.
struct DegenerateAnalyzer : std::runtime_error {
    explicit DegenerateAnalyzer(const std::string& what) : std::runtime_error(what) {}
};

} // namespace framequant
