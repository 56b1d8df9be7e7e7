#ifndef GEOLEX_ERRORS_HPP
#define GEOLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geolex {

/// Filtering removed every cell or every word.
class FilterEmptyError : public std::runtime_error {
 public:
  explicit FilterEmptyError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Unreadable or malformed input file.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geolex

#endif  // GEOLEX_ERRORS_HPP
