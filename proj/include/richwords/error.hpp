#pragma once

#include <stdexcept>
#include <string>

namespace richwords {

// Malformed input: unparsable word, bad morphism spec, letter outside the
// declared alphabet. The CLI maps this to a usage error.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates an operation's precondition, e.g. asking
// for a UPS-factorization of a non-rich word.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result failed its own post-verification. This always indicates a bug
// (or a flaw in the construction being implemented) and is never swallowed.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace richwords
