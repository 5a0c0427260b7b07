#ifndef SEMIINV_TESTS_FIXTURES_HPP
#define SEMIINV_TESTS_FIXTURES_HPP

#include <memory>
#include <string>

#include "semiinv/io.hpp"

namespace semiinv::testing {

inline std::string data_path(const std::string& file) {
  return std::string(SEMIINV_DATA_DIR) + "/" + file;
}

// Shared group instances so expensive closures run once per binary.
inline const ReflectionGroup& b2() {
  static ReflectionGroup g = load_group(data_path("b2.json"));
  return g;
}
inline const ReflectionGroup& s2() {
  static ReflectionGroup g = load_group(data_path("s2.json"));
  return g;
}
inline const ReflectionGroup& z6() {
  static ReflectionGroup g = load_group(data_path("cyclic_6.json"));
  return g;
}
inline const ReflectionGroup& g26() {
  static ReflectionGroup g = load_group(data_path("g26.json"));
  return g;
}

}  // namespace semiinv::testing

#endif
