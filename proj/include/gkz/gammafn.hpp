#pragma once

#include <complex>

namespace gkz {

// Complex gamma function, Lanczos approximation (g = 7, 9 terms) with the
// reflection formula for Re z < 1/2.
std::complex<double> gamma_fn(std::complex<double> z);

// log Gamma with the same scheme; imaginary part is not reduced mod 2*pi,
// it is the analytic continuation of the Lanczos branch.
std::complex<double> log_gamma(std::complex<double> z);

// Reciprocal gamma as an entire function: exactly 0 at nonpositive
// integers (within floating tolerance of the argument).
std::complex<double> rgamma(std::complex<double> z);

}  // namespace gkz
