#ifndef SEMIINV_ERRORS_HPP
#define SEMIINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semiinv {

// Malformed or inconsistent input (bad files, mismatched conductors, ...).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

// An exact computation reached a state that contradicts the mathematics
// (non-integer dimension average, failed closure assertion, ...).  These
// signal implementation bugs or corrupt data, never user errors.
struct math_error : std::runtime_error {
  explicit math_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace semiinv

#endif
