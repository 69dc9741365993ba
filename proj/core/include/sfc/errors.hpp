#pragma once

#include <stdexcept>
#include <string>

namespace sfc {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument value is outside the operation's domain (bad index,
/// mismatched dimensions, malformed input data).
class domain_error : public error {
public:
    using error::error;
};

/// A requested configuration is unsupported (dimension rules, mode/size
/// combinations). Distinct from domain_error so callers can map it to a
/// usage-style failure.
class config_error : public error {
public:
    using error::error;
};

/// An internal invariant failed. Indicates a bug in this library, not in
/// the caller's input.
class internal_error : public error {
public:
    using error::error;
};

} // namespace sfc
