#pragma once

#include <stdexcept>
#include <string>

namespace fmx {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by its arguments.
class precondition_error : public error {
public:
    using error::error;
};

/// Two truncated objects of different order were combined.
class order_mismatch : public error {
public:
    using error::error;
};

/// The data carries too few coefficients/moments/parameters for the request.
class insufficient_data : public error {
public:
    using error::error;
};

/// The input does not describe a positive measure (or the requested object is not one).
class not_a_measure : public error {
public:
    using error::error;
};

/// Input text could not be parsed.
class parse_error : public error {
public:
    using error::error;
};

} // namespace fmx
