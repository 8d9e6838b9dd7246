#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkz/fan.hpp"
#include "gkz/gkzsys.hpp"
#include "gkz/series.hpp"

namespace gkz {

enum class TransformKind { Laplace, Residue, Euler, MixedResidue, MixedEuler };

const char* transform_kind_name(TransformKind k);

struct DualReps {
  std::vector<IntVec> vectors;  // k~(i), first is 0
  IntMatrix modulus;            // t(A_sigma) (or the reduced block for Euler kinds)
};

// Complete system of representatives of Z^n / Z t(A_sigma), graded-colex
// breadth-first search, first element 0.
DualReps dual_representatives(const SimplexData& sd);

// count representatives of Z^n / Z modulus, graded-colex BFS from 0.
std::vector<IntVec> class_representatives(const IntMatrix& modulus, long count);

struct HypothesisCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct TransformMatrix {
  TransformKind kind;
  std::vector<long> sigma;
  std::size_t r = 0;
  std::vector<std::vector<cplx>> entries;
  cplx prefactor{1.0, 0.0};
  std::vector<cplx> left_diag, right_diag;
  std::vector<std::vector<cplx>> character;
  std::vector<IntVec> reps;       // series-side k(j), sigmabar-indexed
  std::vector<IntVec> dual_reps;  // deck-side k~(i), sigma-indexed
  std::vector<long> sigma0;       // labeled points (Euler/Mixed kinds)
  std::vector<HypothesisCheck> checks;
  cplx det{0.0, 0.0};
  double cond = 0.0;  // 1-norm condition estimate
};

// Character matrix (e^{2 pi i <k~(i), A_sigmabar k(j)>})_{ij}; the pairing
// is evaluated as an exact rational mod 1 and exponentiated once.
std::vector<std::vector<cplx>> character_matrix(const SimplexData& sd,
                                                const std::vector<IntVec>& reps,
                                                const std::vector<IntVec>& dual_reps);

struct TransformOptions {
  std::vector<long> sigma0;                      // Euler/Mixed labeled points
  const CayleyStructure* cayley = nullptr;       // required for non-Laplace kinds
  std::optional<std::vector<IntVec>> reps;       // override series reps
  std::optional<std::vector<IntVec>> dual_reps;  // override dual reps
  bool enforce_hypotheses = true;                // throw vs record failures
  long genericity_depth = 12;
};

TransformMatrix transform_matrix(TransformKind kind, const SimplexData& sd, const Parameter& d,
                                 const TransformOptions& opts = {});

// f-vector of one simplex: T_sigma applied to the series values.
std::vector<cplx> basis_eval(const TransformMatrix& T, const std::vector<cplx>& phi);

cplx complex_det(const std::vector<std::vector<cplx>>& m);
double condition_estimate(const std::vector<std::vector<cplx>>& m);

}  // namespace gkz
