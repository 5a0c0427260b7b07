#ifndef SEMIINV_RATIONAL_HPP
#define SEMIINV_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "semiinv/errors.hpp"

namespace semiinv {

// Exact rational scalar. GMP-backed; all arithmetic is exact.
using Rat = boost::multiprecision::mpq_rational;

// GMP does not canonicalize rationals built from strings, so parsing goes
// through this helper.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  Rat r;
  try {
    r = Rat(s);
  } catch (const std::exception&) {
    throw input_error("malformed rational literal: " + s);
  }
  if (denominator(r) == 0) throw input_error("zero denominator in rational literal: " + s);
  mpq_canonicalize(r.backend().data());
  return r;
}

inline std::string rat_str(const Rat& r) { return r.str(); }

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace semiinv

#endif
