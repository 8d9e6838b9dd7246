#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gkz/errors.hpp"

namespace gkz {

// Exact arithmetic lives on boost::multiprecision; cpp_rational keeps
// fractions reduced after every operation, which is the module contract.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

inline double to_double(const Int& x) { return x.convert_to<double>(); }
inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return den(x) == 1; }

// Floor of a rational.
inline Int rat_floor(const Rat& x) {
  Int n = num(x), d = den(x);
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

// Reduce x into [0,1).
inline Rat mod1(const Rat& x) { return x - Rat(rat_floor(x)); }

// Parses "p/q", "p", or a plain integer written in decimal.
Rat parse_rational(const std::string& s);
std::string rational_string(const Rat& x);

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat rat_dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat rat_sum(const RatVec& a) {
  Rat s = 0;
  for (const auto& x : a) s += x;
  return s;
}

}  // namespace gkz
