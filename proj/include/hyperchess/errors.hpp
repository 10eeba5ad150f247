#pragma once

#include <stdexcept>
#include <string>

namespace hyperchess {

// Root of the library's error hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed vertices, unknown ids, violated preconditions.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// Operation not defined for the requested piece (e.g. radius/diameter of a
// directed forward pawn).
class UnsupportedPieceError : public InvalidArgumentError {
public:
    using InvalidArgumentError::InvalidArgumentError;
};

// The computation would exceed memory, storage-width, or size limits.
class ComputationInfeasibleError : public Error {
public:
    using Error::Error;
};

// Malformed or undumpable distance-field binary data.
class DumpFormatError : public Error {
public:
    using Error::Error;
};

// A staged computation failed partway; carries the last fully completed stage.
class PartialResultError : public Error {
public:
    PartialResultError(const std::string& msg, int last_completed_n)
        : Error(msg), last_completed_n_(last_completed_n) {}

    int last_completed_n() const noexcept { return last_completed_n_; }

private:
    int last_completed_n_;
};

} // namespace hyperchess
