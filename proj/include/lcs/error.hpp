#ifndef LCS_ERROR_HPP
#define LCS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lcs {

// Library-wide error type; the CLI maps it to exit code 2.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lcs

#endif
