#pragma once

#include <optional>
#include <vector>

#include "gkz/fan.hpp"
#include "gkz/gkzsys.hpp"

namespace gkz {

// One Gamma-series attached to (sigma, k): exponent vector
// v = (-A_sigma^{-1}(c + A_sigmabar k), k) and the coset support set.
struct GammaSeriesSpec {
  SimplexData simplex;
  IntVec k;  // indexed by sbar order
  Parameter parameter;
  std::vector<cplx> exponent;  // v, indexed by column position
};

GammaSeriesSpec make_series(const SimplexData& sd, const IntVec& k, const Parameter& parameter);

// v_sigma^k by column position; verifies A v = -c.
std::vector<cplx> exponent_vector(const SimplexData& sd, const IntVec& k,
                                  const Parameter& parameter);

// r integer vectors k(i) >= 0 whose classes [A_sigmabar k(i)] exhaust
// Z^n / Z A_sigma; graded-colex breadth-first search, k(1) = 0.
std::vector<IntVec> representatives(const SimplexData& sd);

// Members of Lambda_k with |k+m| <= bound, graded colex order.
std::vector<IntVec> lambda_set(const GammaSeriesSpec& spec, long bound);
std::vector<IntVec> lambda_set(const SimplexData& sd, const IntVec& k, long bound);

struct GenericityResult {
  enum class Verdict { Yes, No, UnknownBeyondDepth } verdict;
  IntVec witness;           // m with an integral entry (verdict == No)
  std::size_t entry = 0;    // which entry of A_sigma^{-1}(c + A_sigmabar m)
};

// Exact decision for exact rational parameters (per-entry congruence over
// residues of m); depth-bounded search otherwise.
GenericityResult very_generic(const SimplexData& sd, const Parameter& parameter, long depth = 20);

struct SeriesValue {
  cplx value{0.0, 0.0};
  long truncation_order = 0;
  double tail_bound = 0.0;  // +inf when outside the contraction region
  long terms_summed = 0;
};

SeriesValue eval(const GammaSeriesSpec& spec, const std::vector<cplx>& z, long order);

// Euler operators annihilate each monomial exactly (verified per term,
// exactly for rational parameters); box operators are applied to the
// truncated series and the maximal surviving coefficient modulus over the
// fully cancelled degree range is returned.
double operator_residual(const GammaSeriesSpec& spec, const OperatorDescriptor& op, long order);

}  // namespace gkz
