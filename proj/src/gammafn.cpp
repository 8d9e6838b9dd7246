#include "gkz/gammafn.hpp"

#include <cmath>

namespace gkz {

namespace {

using cplx = std::complex<double>;
constexpr double pi = 3.14159265358979323846264338327950288;

const double lanczos_g = 7.0;
const double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cplx lanczos_sum(cplx z) {
  // z is the shifted argument with Re z >= 0.5; series in 1/(z+k).
  cplx s = lanczos_c[0];
  for (int k = 1; k < 9; ++k) s += lanczos_c[k] / (z + double(k - 1));
  return s;
}

bool near_nonpositive_integer(cplx z, double tol = 1e-13) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol * std::max(1.0, std::abs(z.real()));
}

}  // namespace

cplx gamma_fn(cplx z) {
  if (z.real() < 0.5) {
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
    return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
  }
  cplx zz = z - 1.0;
  cplx base = zz + lanczos_g + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(base, zz + 0.5) * std::exp(-base) * lanczos_sum(zz + 1.0);
}

cplx log_gamma(cplx z) {
  if (z.real() < 0.5) {
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  cplx zz = z - 1.0;
  cplx base = zz + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (zz + 0.5) * std::log(base) - base +
         std::log(lanczos_sum(zz + 1.0));
}

cplx rgamma(cplx z) {
  if (near_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) {
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi, entire through the poles
    return std::sin(pi * z) * gamma_fn(1.0 - z) / pi;
  }
  return 1.0 / gamma_fn(z);
}

}  // namespace gkz
