#pragma once

#include <stdexcept>

namespace percolour {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid input: parse failures, violated preconditions, mismatched witnesses.
class InputError : public Error {
public:
    using Error::Error;
};

// An exactness cap was exceeded.
class CapError : public Error {
public:
    using Error::Error;
};

}  // namespace percolour
