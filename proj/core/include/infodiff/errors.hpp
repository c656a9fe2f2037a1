#pragma once

#include <stdexcept>
#include <string>

namespace infodiff {

/// Base for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input structure (mixed line shapes, conflicting labels, empty files).
class FormatError : public Error {
public:
    using Error::Error;
};

/// A token that is not an integer / number.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Node id or value outside its allowed range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Invalid function argument (bad sizes, out-of-domain parameters).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Inconsistent configuration (beta mismatch, LT weight sums > 1, bad config file).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A diffusion step was applied to a state of the wrong representation.
class ModelMismatchError : public Error {
public:
    using Error::Error;
};

/// Object used in the wrong lifecycle state (e.g. unfinalized InfoMatrix).
class StateError : public Error {
public:
    using Error::Error;
};

/// Cover of the wrong kind (overlapping where a partition is required).
class ModeError : public Error {
public:
    using Error::Error;
};

} // namespace infodiff
