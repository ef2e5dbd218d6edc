#pragma once

#include <stdexcept>
#include <string>

namespace dynahill {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (mixed moduli, bad dimensions, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Multiplicative inverse of zero requested.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A matrix required to be invertible turned out singular.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// Rejection sampling exhausted its retry budget.
class SamplingFailure : public Error {
public:
    using Error::Error;
};

/// A key file or ciphertext container does not conform to its format.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Decoded symbols cannot be recomposed into bytes.
class CorruptData : public Error {
public:
    using Error::Error;
};

/// Fewer symbols available than the recorded plaintext length requires.
class TruncatedData : public Error {
public:
    using Error::Error;
};

} // namespace dynahill
