#pragma once

#include <stdexcept>
#include <string>

namespace gridmorse {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap was hit (brute-force size, frontier width,
// tree node guard, complex cell guard). Harnesses treat this as SKIPPED.
struct CapExceeded : Error {
    using Error::Error;
};

// Invalid family parameters or arguments.
struct InvalidSpec : Error {
    using Error::Error;
};

// Malformed text document (graph files, subset literals).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace gridmorse
