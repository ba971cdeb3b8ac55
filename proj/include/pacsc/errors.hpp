#pragma once

#include <stdexcept>
#include <string>

namespace pacsc {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoSignChange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConflictingLabels : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pacsc
