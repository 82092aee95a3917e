#pragma once

#include <stdexcept>
#include <string>

namespace cspacevis {

// Malformed or out-of-contract input. The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A render or experiment configuration that cannot be realized, e.g. a
// layout whose outermost ring does not fit on the canvas.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

// Failure while running a pipeline on valid input. Exit code 2.
class ExperimentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejection sampling ran out of its attempt budget.
class SamplingTimeout : public ExperimentError {
 public:
  using ExperimentError::ExperimentError;
};

}  // namespace cspacevis
