#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gkz/numeric.hpp"
#include "gkz/quad.hpp"

namespace gkz {

// One smooth parametrized piece of a contour, parameter in [0,1].
struct Segment {
  std::function<cplx(double)> pos;
  std::function<cplx(double)> dpos;
};

Segment seg_line(cplx a, cplx b);
Segment seg_arc(cplx center, double radius, double theta0, double theta1);
// Straight segment with polynomial grading of order m at both ends;
// regularizes integrable endpoint singularities t^a with m*(a+1) >= 1.
Segment seg_graded_line(cplx a, cplx b, int m = 6);

// A multivalued power-factor base phi(zeta) = a + b*zeta whose argument is
// continued along the path, starting from start_arg at the path origin.
struct PowerFactor {
  cplx a, b;
  double start_arg = 0.0;
};

struct PathSpec {
  std::vector<Segment> segments;
  std::vector<PowerFactor> factors;
};

// Pre-walks a path once, recording continued arguments of every factor on
// a refinement grid fine enough that any intermediate point is one
// principal-argument step away from its anchor.
class BranchedPath {
public:
  explicit BranchedPath(const PathSpec& spec);

  std::size_t num_segments() const { return spec_.segments.size(); }
  const Segment& segment(std::size_t k) const { return spec_.segments[k]; }
  std::size_t num_factors() const { return spec_.factors.size(); }

  // Continued logs log(phi_i(pos(tau))) at parameter tau of segment k.
  void logs_at(std::size_t k, double tau, std::vector<cplx>& out) const;

  // final minus initial tracked argument per factor (2*pi*winding for a
  // closed cycle that unwinds, 0 for a commutator).
  const std::vector<double>& net_arg_change() const { return net_change_; }

private:
  struct Anchor {
    double tau;
    std::vector<double> args;
  };
  PathSpec spec_;
  std::vector<std::vector<Anchor>> anchors_;
  std::vector<double> net_change_;
};

// Integrand receives the point and the continued logs of the declared
// factors, and must include every multivalued power through those logs.
using BranchedIntegrand = std::function<cplx(cplx zeta, const std::vector<cplx>& logs)>;

struct PathIntegralResult {
  cplx value{0.0, 0.0};
  double est_error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

PathIntegralResult path_integral(const BranchedPath& path, const BranchedIntegrand& f,
                                 double rel_tol, double abs_tol = 0.0,
                                 int max_intervals_per_segment = 2048);

// Truncated Hankel contour (rays at arguments -pi and +pi out to -R, loop
// of radius delta): integral of xi^(alpha-1) e^xi, equal to
// 2*pi*i / Gamma(1-alpha).
PathIntegralResult hankel_integral(cplx alpha, double delta, double R, double tol);
// Chooses R from tol so the truncated tail is dominated by it.
PathIntegralResult hankel_integral(cplx alpha, double tol);

// Commutator (double-loop) cycle around {0,1}.
PathSpec pochhammer_loop_path(double radius = 0.2, double base = 0.5);

// Pochhammer cycle integral for the k-simplex weight functions,
// k in {1,2}:
//   k=1:  t^(a1-1) (1-t)^(a2-1) over the commutator of loops around 0,1
//   k=2:  nested quadrature, outer commutator in t1, inner 1-D Pochhammer
//         cycle in t2 with branch data continued along the outer path.
// Matches (1-e^{-2 pi i a_1})...(1-e^{-2 pi i a_{k+1}})
//         Gamma(a_1)...Gamma(a_{k+1}) / Gamma(a_1+...+a_{k+1}).
PathIntegralResult pochhammer_integral(const std::vector<cplx>& alphas, int k, double tol,
                                       double radius = 0.2);

// Gauss 2F1 oracles: the four classical representations evaluated
// independently of each other.
enum class GaussRepr { Series, Euler, Laplace, Residue };

struct OracleResult {
  cplx value{0.0, 0.0};
  double est_error = 0.0;
  long evaluations = 0;
};

OracleResult gauss_oracle(cplx alpha, cplx beta, cplx gamma, cplx z, GaussRepr repr, double tol);

// Numeric contour evaluation of the rank-2 Laplace-type worked example
// (columns (1,0),(0,2),(-1,3), simplex {1,2}): product Hankel x Pochhammer
// cycle in plane-wave coordinates, with an optional deck transform ktilde.
// Returns f_{sigma1,ktilde}(z).
OracleResult laplace_cycle_oracle(cplx c1, cplx c2, const std::vector<cplx>& z,
                                  const std::vector<long>& ktilde, double tol);

}  // namespace gkz
