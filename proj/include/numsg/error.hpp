#pragma once

#include <stdexcept>
#include <string>

namespace numsg {

/// Base of everything the library throws.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed user input: empty generator list, gcd != 1, overflow, bad options.
class InvalidInput : public Error {
public:
	using Error::Error;
};

/// An operation was called outside its domain, e.g. order() of a gap.
class DomainError : public Error {
public:
	using Error::Error;
};

/// A mathematical invariant failed to hold. Always a bug, never bad input.
class InternalError : public Error {
public:
	using Error::Error;
};

} // namespace numsg
