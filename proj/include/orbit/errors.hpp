#pragma once

#include <stdexcept>
#include <string>

namespace orbit {

/// Raised when caller-supplied data violates a documented precondition.
/// The CLI maps it to exit code 2.
class InputError : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails (e.g. a differential that does not
/// square to zero). The CLI maps it to exit code 1.
class InternalError : public std::logic_error
{
public:
	using std::logic_error::logic_error;
};

} // namespace orbit
