#pragma once

#include <stdexcept>
#include <string>

namespace evident {

// Input-side failures (bad files, bad arguments). CLI exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Failures of the computation itself on valid input. CLI exit code 3.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
    using InputError::InputError;
};
struct InvalidScale : InputError {
    using InputError::InputError;
};
struct UnknownTerm : InputError {
    using InputError::InputError;
};
struct DuplicateResponse : InputError {
    using InputError::InputError;
};
struct EmptyGroup : InputError {
    using InputError::InputError;
};
struct MissingDocument : InputError {
    using InputError::InputError;
};
struct DuplicateDocId : InputError {
    using InputError::InputError;
};
struct IncompleteGrid : InputError {
    using InputError::InputError;
};
struct WeightMismatch : InputError {
    using InputError::InputError;
};
struct DegreeTooHigh : InputError {
    using InputError::InputError;
};
struct EmptyInput : InputError {
    using InputError::InputError;
};
struct InvalidInput : InputError {
    using InputError::InputError;
};

struct TotalConflict : ComputeError {
    using ComputeError::ComputeError;
};
struct NoMarkerMatches : ComputeError {
    using ComputeError::ComputeError;
};
struct DomainError : ComputeError {
    using ComputeError::ComputeError;
};
struct ZeroTotal : ComputeError {
    using ComputeError::ComputeError;
};

}  // namespace evident
