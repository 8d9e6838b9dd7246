#pragma once

#include <vector>

#include "gkz/intmat.hpp"

namespace gkz {

// P * M * Q = D with P, Q unimodular and D diagonal, d1 | d2 | ...,
// diagonal entries nonnegative.
struct SnfResult {
  IntMatrix P, D, Q;
};

SnfResult smith_normal_form(const IntMatrix& M);

// Exact inverse of a nonsingular square integer matrix.
RatMatrix rational_inverse(const IntMatrix& M);
RatMatrix rational_inverse(const RatMatrix& M);

// Z-basis of Ker_Z A for an n x N matrix of full row rank n.  Each basis
// vector is sign-normalized so its first nonzero entry is positive.
std::vector<IntVec> lattice_kernel(const IntMatrix& A);

// The finite abelian group Z^n / Z B for square nonsingular B.
class QuotientGroup {
public:
  explicit QuotientGroup(const IntMatrix& B);

  const IntMatrix& base() const { return base_; }
  const Int& order() const { return order_; }
  // Invariant factors > 1 (empty for the trivial group).
  const IntVec& invariant_factors() const { return factors_; }

  // Normal form of the coset of w: equal tuples iff w - w' in Z B.
  IntVec canonical_form(const IntVec& w) const;
  bool is_member(const IntVec& w) const;  // w in Z B
  // All cosets, as canonical-form tuples (order = group order).
  std::vector<IntVec> enumerate_classes() const;

private:
  IntMatrix base_;
  SnfResult snf_;
  Int order_;
  IntVec diag_;     // full diagonal of D
  IntVec factors_;  // entries > 1
};

// Decides w in Z B exactly; B square nonsingular.
bool lattice_member(const IntMatrix& B, const IntVec& w);

// The duality pairing <v,w> = t(v) B^{-1} w reduced mod 1, as an exact
// rational in [0,1).  Depends only on the classes of v mod Z tB and of
// w mod Z B.
Rat pairing(const IntVec& v, const IntVec& w, const IntMatrix& B);

}  // namespace gkz
