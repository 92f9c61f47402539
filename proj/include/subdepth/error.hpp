#ifndef SUBDEPTH_ERROR_HPP
#define SUBDEPTH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace subdepth {

/// Raised when caller-supplied data violates a precondition (shape, sign,
/// symmetry, file syntax). The CLI maps it to exit code 2.
class input_error : public std::invalid_argument {
public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal invariant fails. Always a bug; CLI exit code 3.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace subdepth

#endif  // SUBDEPTH_ERROR_HPP
