#pragma once

#include <stdexcept>
#include <string>

namespace ps2c {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input text (UCR file, CLI list argument).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// No (alpha, omega) cell produced a non-empty sampler.
class NoPatternsError : public Error {
public:
    NoPatternsError() : Error("no discriminative patterns found") {}
};

}  // namespace ps2c
