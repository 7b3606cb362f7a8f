#ifndef HERON_ERRORS_HPP
#define HERON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heron {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SymmetryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPSDError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RangeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SpectrumBoundsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace heron

#endif
