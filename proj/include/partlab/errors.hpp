#pragma once

#include <stdexcept>
#include <string>

namespace partlab {

// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_partition : public error {
public:
    using error::error;
};

// Input lies outside the domain of an operation (parameter ranges, bijection classes).
class domain_error : public error {
public:
    using error::error;
};

// Enumeration cap or series order exceeded.
class resource_limit : public error {
public:
    using error::error;
};

class unsupported_family : public error {
public:
    using error::error;
};

class order_mismatch : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

} // namespace partlab
