#pragma once

#include <vector>

#include "gkz/exactlat.hpp"
#include "gkz/gkzsys.hpp"

namespace gkz {

// An n-column simplex block with its exact inverse, Gevrey exponents for
// the complement columns, and the finite quotient group Z^n / Z A_sigma.
struct SimplexData {
  std::vector<long> sigma;       // sorted labels
  std::vector<std::size_t> pos;  // column positions in A
  IntMatrix Asigma;
  RatMatrix inv;  // A_sigma^{-1}
  Int det;
  std::vector<long> sbar;        // complement labels, sorted
  std::vector<std::size_t> bpos; // their column positions
  IntMatrix Abar;                // complement columns, aligned with sbar
  RatMatrix inv_Abar;            // A_sigma^{-1} A_sigmabar
  RatVec s;                      // s_j = |A_sigma^{-1} a(j)|, aligned with sbar
  QuotientGroup group;

  Int r() const { return det < 0 ? Int(-det) : det; }
};

SimplexData make_simplex(const IntMatrix& A, const std::vector<long>& labels,
                         std::vector<long> sigma);
SimplexData make_simplex(const SystemSpec& spec, const std::vector<long>& sigma);

struct TriangulationData {
  RatVec omega;
  std::vector<SimplexData> simplices;
  Int volume;                     // sum of |det|
  std::vector<RatVec> cone_rows;  // facet inequalities of C_T, primitive rows
  std::vector<long> labels;
};

// All maximal simplices of T(omega) by exact enumeration of the C(N,n)
// column subsets.  A decision tie (equality at some j outside sigma) is a
// hard NonGenericWeight error naming the offending (sigma, j).  Candidate
// subsets are screened by a pure map over jobs worker threads; results are
// merged in enumeration order, so the output does not depend on the
// schedule.
TriangulationData regular_triangulation(const IntMatrix& A, const std::vector<long>& labels,
                                        const RatVec& omega, int jobs = 1);
TriangulationData regular_triangulation(const SystemSpec& spec, const RatVec& omega,
                                        int jobs = 1);

// The rows omega_j - t(A_sigma^{-1} a(j)) . omega_sigma for sigma in T,
// j outside sigma; primitive integer rows, deduplicated, all strictly
// positive at the defining omega.
std::vector<RatVec> cone_of(const TriangulationData& T, const IntMatrix& A,
                            const std::vector<long>& labels);

RatVec gevrey_exponents(const SimplexData& sd);
std::vector<long> sbar_plus(const SimplexData& sd);

Int normalized_volume(const TriangulationData& T);

// A torus point with log|z| on an interior ray of C_T, scaled so every
// convergence constraint |z_sigma^{-A_sigma^{-1} a(j)} z_j| stays below
// R*margin; phases are zero (positive real coordinates).
std::vector<cplx> sample_point(const TriangulationData& T, double R = 0.1, double margin = 0.5);

}  // namespace gkz
