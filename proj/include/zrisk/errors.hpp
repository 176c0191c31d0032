#ifndef ZRISK_ERRORS_HPP_
#define ZRISK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zrisk {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed, inconsistent or out-of-domain input. Maps to CLI exit code 1.
class validation_error : public error {
public:
  explicit validation_error(const std::string& what) : error(what) {}
};

}  // namespace zrisk

#endif  // ZRISK_ERRORS_HPP_
