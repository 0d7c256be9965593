#pragma once

#include <stdexcept>

namespace mconc {

// Malformed input: bad dimensions, subsets, permutations, spec weights,
// unreadable files.  The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ShapeError : public InputError {
public:
  using InputError::InputError;
};

class ValidationError : public InputError {
public:
  using InputError::InputError;
};

// A numerical invariant broke: norm or trace off beyond tolerance, negative
// expectation value, non-positive matrix.  The CLI maps these to exit code 1.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace mconc
