#pragma once

#include <complex>
#include <functional>

namespace gkz {

struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  double est_error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

// Adaptive Gauss-Kronrod (G7,K15) on a real parameter interval.
QuadResult quad_gk(const std::function<std::complex<double>(double)>& f, double a, double b,
                   double rel_tol, double abs_tol, int max_intervals = 4096);

// tanh-sinh rule on (0,1); the integrand receives (t, 1-t) with both
// endpoint distances computed stably, so endpoint-singular factors can be
// evaluated accurately.
QuadResult quad_tanh_sinh_01(
    const std::function<std::complex<double>(double t, double one_minus_t)>& f, double tol,
    int max_level = 12);

// exp-sinh rule on (0,inf) for integrands with algebraic behaviour at 0
// and (super)exponential decay at infinity.
QuadResult quad_exp_sinh(const std::function<std::complex<double>(double t)>& f, double tol,
                         int max_level = 12);

}  // namespace gkz
