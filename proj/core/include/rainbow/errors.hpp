#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Malformed or out-of-range input: bad vertex index, duplicate edge,
/// mismatched ground sets, unparsable instance text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver or checker was called outside the hypothesis under which its
/// guarantee holds (non-shifted input, size bound not met, scale guardrail).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A step that the underlying theorem guarantees could not be carried out.
/// Either the implementation is wrong or the input is a genuine
/// counterexample; callers should dump the instance.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rainbow
