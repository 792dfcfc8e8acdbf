#pragma once

#include <stdexcept>
#include <string>

namespace predictkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad or incomplete configuration (missing mapped column, unknown key, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed input data: duplicate keys, non-numeric cells, negative capitalizations.
class DataError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation (log of a non-positive number, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class SampleSizeError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    using Error::Error;
};

class UnsupportedAssetError : public Error {
public:
    using Error::Error;
};

/// A statistic is undefined for the given input (zero denominator).
class DegenerateError : public Error {
public:
    using Error::Error;
};

}  // namespace predictkit
