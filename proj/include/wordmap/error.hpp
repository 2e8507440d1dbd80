#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordmap {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class InvalidRing : public Error {
public:
    using Error::Error;
};

class RingLacksRoots : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class UnboundConstant : public Error {
public:
    using Error::Error;
};

class DegenerateLambda : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class InvalidType : public Error {
public:
    using Error::Error;
};

/// Parse failure; `position()` is a byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

class EmptyInnerWord : public Error {
public:
    using Error::Error;
};

class ZeroExponent : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

} // namespace wordmap
